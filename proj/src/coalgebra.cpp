#include "coderco/coalgebra.hpp"

#include <string>
#include <utility>

#include "coderco/errors.hpp"

namespace coderco {

Coalgebra::Coalgebra(Index dimension, SparseMat coproduct)
    : dim(dimension), delta(std::move(coproduct)) {
    if (dim <= 0)
        throw ShapeError("coalgebra dimension must be positive, got " + std::to_string(dim));
    checked_pow(dim, 2);
    if (delta.rows() != dim * dim || delta.cols() != dim)
        throw ShapeError("delta must be " + std::to_string(dim * dim) + "x" +
                         std::to_string(dim) + ", got " + std::to_string(delta.rows()) + "x" +
                         std::to_string(delta.cols()));
}

ValidationReport check_coassoc(const Coalgebra& c) {
    const SparseMat id = SparseMat::identity(c.dim);
    const SparseMat lhs = kron(id, c.delta) * c.delta;
    const SparseMat rhs = kron(c.delta, id) * c.delta;
    ValidationReport report;
    report.laws.push_back({"coassociativity", lhs - rhs, {c.dim, c.dim, c.dim}});
    return report;
}

ValidationReport check_coderivation(const Coalgebra& c, const SparseMat& psi) {
    if (psi.rows() != c.dim || psi.cols() != c.dim)
        throw ShapeError("coderivation must be " + std::to_string(c.dim) + "x" +
                         std::to_string(c.dim));
    const SparseMat id = SparseMat::identity(c.dim);
    const SparseMat lhs = c.delta * psi;
    const SparseMat rhs = (kron(psi, id) + kron(id, psi)) * c.delta;
    ValidationReport report;
    report.laws.push_back({"coderivation", lhs - rhs, {c.dim, c.dim}});
    return report;
}

CoderPair::CoderPair(Coalgebra coalg, SparseMat coderivation)
    : c(std::move(coalg)), psi(std::move(coderivation)) {
    require_valid(check_coassoc(c), "coalgebra");
    require_valid(check_coderivation(c, psi), "coderivation");
}

SparseMat grading_coderivation(const std::vector<Rat>& weights) {
    SparseMat m(static_cast<Index>(weights.size()), static_cast<Index>(weights.size()));
    for (Index i = 0; i < static_cast<Index>(weights.size()); ++i)
        m.set(i, i, weights[static_cast<std::size_t>(i)]);
    return m;
}

namespace {

Rat binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

SparseMat range_grading(Index n) {
    std::vector<Rat> weights;
    for (Index i = 0; i < n; ++i)
        weights.emplace_back(static_cast<long>(i));
    return grading_coderivation(weights);
}

}  // namespace

Coalgebra divided_power(Index n_max) {
    if (n_max < 0)
        throw ShapeError("divided_power: negative degree");
    const Index d = n_max + 1;
    SparseMat delta(d * d, d);
    for (Index m = 0; m <= n_max; ++m)
        for (Index i = 0; i <= m; ++i)
            delta.set((m - i) * d + i, m,
                      binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i)));
    return {d, std::move(delta)};
}

SparseMat divided_power_grading(Index n_max) {
    return range_grading(n_max + 1);
}

Coalgebra binomial_bialgebra(Index n_max) {
    if (n_max < 0)
        throw ShapeError("binomial_bialgebra: negative degree");
    const Index d = n_max + 1;
    SparseMat delta(d * d, d);
    for (Index n = 0; n <= n_max; ++n)
        for (Index i = 0; i <= n; ++i)
            delta.set(i * d + (n - i), n,
                      binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)));
    return {d, std::move(delta)};
}

SparseMat binomial_grading(Index n_max) {
    return range_grading(n_max + 1);
}

Coalgebra comatrix(Index n) {
    if (n <= 0)
        throw ShapeError("comatrix: order must be positive");
    const Index d = n * n;
    checked_pow(d, 2);
    SparseMat delta(d * d, d);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k)
                delta.set((i * n + k) * d + (k * n + j), i * n + j, Rat(1));
    return {d, std::move(delta)};
}

SparseMat comatrix_grading(Index n) {
    std::vector<Rat> weights;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            weights.emplace_back(static_cast<long>(i - j));
    return grading_coderivation(weights);
}

namespace {

struct WordIndexer {
    Index letters;
    Index max_len;
    std::vector<Index> offsets;  // offsets[k] = index of the first length-k word

    WordIndexer(Index v, Index n) : letters(v), max_len(n) {
        offsets.resize(static_cast<std::size_t>(n) + 2, 0);
        Index count = 1;
        for (Index k = 0; k <= n; ++k) {
            offsets[static_cast<std::size_t>(k) + 1] = offsets[static_cast<std::size_t>(k)] + count;
            count *= v;
        }
    }

    Index dim() const { return offsets.back(); }

    Index index(const std::vector<Index>& word) const {
        Index value = 0;
        for (Index digit : word)
            value = value * letters + digit;
        return offsets[word.size()] + value;
    }
};

}  // namespace

Coalgebra truncated_tensor_coalgebra(Index letters, Index max_len) {
    if (letters <= 0 || max_len < 0)
        throw ShapeError("truncated_tensor: need letters >= 1, max_len >= 0");
    const WordIndexer ix(letters, max_len);
    const Index d = ix.dim();
    checked_pow(d, 2);
    SparseMat delta(d * d, d);
    std::vector<Index> word;
    // Enumerates words by length, then lexicographically, via odometer.
    for (Index len = 0; len <= max_len; ++len) {
        word.assign(static_cast<std::size_t>(len), 0);
        while (true) {
            const Index w = ix.index(word);
            for (Index cut = 0; cut <= len; ++cut) {
                const std::vector<Index> left(word.begin(), word.begin() + cut);
                const std::vector<Index> right(word.begin() + cut, word.end());
                delta.add_at(ix.index(left) * d + ix.index(right), w, Rat(1));
            }
            // advance odometer
            Index pos = len - 1;
            while (pos >= 0 && word[static_cast<std::size_t>(pos)] == letters - 1) {
                word[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                break;
            ++word[static_cast<std::size_t>(pos)];
        }
    }
    return {d, std::move(delta)};
}

SparseMat truncated_tensor_grading(Index letters, Index max_len) {
    const WordIndexer ix(letters, max_len);
    std::vector<Rat> weights(static_cast<std::size_t>(ix.dim()));
    for (Index len = 0; len <= max_len; ++len)
        for (Index w = ix.offsets[static_cast<std::size_t>(len)];
             w < ix.offsets[static_cast<std::size_t>(len) + 1]; ++w)
            weights[static_cast<std::size_t>(w)] = Rat(static_cast<long>(len));
    return grading_coderivation(weights);
}

Coalgebra grouplike() {
    SparseMat delta(1, 1);
    delta.set(0, 0, Rat(1));
    return {1, std::move(delta)};
}

Coalgebra zero_coproduct(Index dim) {
    return {dim, SparseMat(dim * dim, dim)};
}

}  // namespace coderco
