#include "coderco/sparse.hpp"

#include <algorithm>
#include <string>

#include "coderco/config.hpp"
#include "coderco/errors.hpp"

namespace coderco {

Index checked_pow(Index base, int exp) {
    if (base < 0 || exp < 0)
        throw OverflowError("checked_pow: negative input");
    const Index bound = config().index_bound;
    Index result = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && result > bound / base)
            throw OverflowError("index bound exceeded: " + std::to_string(base) + "^" +
                                std::to_string(exp) + " > " + std::to_string(bound));
        result *= base;
    }
    if (result > bound)
        throw OverflowError("index bound exceeded");
    return result;
}

Index checked_mul(Index a, Index b) {
    if (a < 0 || b < 0)
        throw OverflowError("checked_mul: negative input");
    const Index bound = config().index_bound;
    if (b != 0 && a > bound / b)
        throw OverflowError("index bound exceeded: " + std::to_string(a) + "*" +
                            std::to_string(b) + " > " + std::to_string(bound));
    return a * b;
}

SparseMat::SparseMat(Index rows, Index cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw ShapeError("negative matrix dimension");
    const Index bound = config().index_bound;
    if (rows > bound || cols > bound)
        throw OverflowError("matrix dimension " + std::to_string(std::max(rows, cols)) +
                            " exceeds index bound " + std::to_string(bound));
}

SparseMat SparseMat::identity(Index n) {
    SparseMat m(n, n);
    for (Index i = 0; i < n; ++i)
        m.data_.emplace(std::make_pair(i, i), Rat(1));
    return m;
}

void SparseMat::check_index(Index row, Index col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw ShapeError("entry (" + std::to_string(row) + "," + std::to_string(col) +
                         ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

Rat SparseMat::at(Index row, Index col) const {
    check_index(row, col);
    const auto it = data_.find({row, col});
    return it == data_.end() ? Rat(0) : it->second;
}

void SparseMat::set(Index row, Index col, Rat value) {
    check_index(row, col);
    if (value == 0)
        data_.erase({row, col});
    else
        data_.insert_or_assign({row, col}, std::move(value));
}

void SparseMat::add_at(Index row, Index col, const Rat& value) {
    check_index(row, col);
    if (value == 0)
        return;
    auto [it, inserted] = data_.emplace(std::make_pair(row, col), value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0)
            data_.erase(it);
    }
}

SparseMat SparseMat::transpose() const {
    SparseMat out(cols_, rows_);
    for (const auto& [rc, v] : data_)
        out.data_.emplace(std::make_pair(rc.second, rc.first), v);
    return out;
}

SparseMat SparseMat::scaled(const Rat& factor) const {
    SparseMat out(rows_, cols_);
    if (factor == 0)
        return out;
    for (const auto& [rc, v] : data_)
        out.data_.emplace(rc, v * factor);
    return out;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("sum of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    SparseMat out = a;
    for (const auto& [rc, v] : b.data_)
        out.add_at(rc.first, rc.second, v);
    return out;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) {
    return a + (-b);
}

SparseMat SparseMat::operator-() const {
    SparseMat out(rows_, cols_);
    for (const auto& [rc, v] : data_)
        out.data_.emplace(rc, -v);
    return out;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    if (a.cols_ != b.rows_)
        throw ShapeError("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    // Bucket a by column once so each b-entry touches only matching a-entries.
    std::map<Index, std::vector<std::pair<Index, const Rat*>>> a_by_col;
    for (const auto& [rc, v] : a.data_)
        a_by_col[rc.second].emplace_back(rc.first, &v);
    SparseMat out(a.rows_, b.cols_);
    for (const auto& [rc, v] : b.data_) {
        const auto it = a_by_col.find(rc.first);
        if (it == a_by_col.end())
            continue;
        for (const auto& [arow, aval] : it->second)
            out.add_at(arow, rc.second, *aval * v);
    }
    return out;
}

bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

SparseMat kron(const SparseMat& a, const SparseMat& b) {
    const Index bound = config().index_bound;
    if (b.rows() != 0 && a.rows() > bound / std::max<Index>(b.rows(), 1))
        throw OverflowError("kron rows exceed index bound");
    if (b.cols() != 0 && a.cols() > bound / std::max<Index>(b.cols(), 1))
        throw OverflowError("kron cols exceed index bound");
    SparseMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (const auto& [arc, av] : a.entries())
        for (const auto& [brc, bv] : b.entries())
            out.set(arc.first * b.rows() + brc.first, arc.second * b.cols() + brc.second,
                    av * bv);
    return out;
}

Rat SparseVec::at(Index i) const {
    const auto it = entries.find(i);
    return it == entries.end() ? Rat(0) : it->second;
}

void SparseVec::set(Index i, Rat value) {
    if (i < 0 || i >= dim)
        throw ShapeError("vector index " + std::to_string(i) + " outside dim " +
                         std::to_string(dim));
    if (value == 0)
        entries.erase(i);
    else
        entries.insert_or_assign(i, std::move(value));
}

void SparseVec::add_at(Index i, const Rat& value) {
    if (value == 0)
        return;
    if (i < 0 || i >= dim)
        throw ShapeError("vector index outside dim");
    auto [it, inserted] = entries.emplace(i, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0)
            entries.erase(it);
    }
}

bool operator==(const SparseVec& a, const SparseVec& b) {
    return a.dim == b.dim && a.entries == b.entries;
}

SparseVec column(const SparseMat& m, Index col) {
    SparseVec v(m.rows());
    for (const auto& [rc, val] : m.entries())
        if (rc.second == col)
            v.entries.emplace(rc.first, val);
    return v;
}

std::vector<SparseVec> nonzero_columns(const SparseMat& m) {
    std::map<Index, SparseVec> by_col;
    for (const auto& [rc, val] : m.entries()) {
        auto [it, inserted] = by_col.try_emplace(rc.second, SparseVec(m.rows()));
        it->second.entries.emplace(rc.first, val);
    }
    std::vector<SparseVec> cols;
    cols.reserve(by_col.size());
    for (auto& [c, vec] : by_col)
        cols.push_back(std::move(vec));
    return cols;
}

SparseMat columns_to_mat(Index dim, const std::vector<SparseVec>& cols) {
    SparseMat out(dim, static_cast<Index>(cols.size()));
    for (Index j = 0; j < static_cast<Index>(cols.size()); ++j) {
        if (cols[j].dim != dim)
            throw ShapeError("column dimension mismatch");
        for (const auto& [i, v] : cols[j].entries)
            out.set(i, j, v);
    }
    return out;
}

SparseVec mat_vec(const SparseMat& m, const SparseVec& v) {
    if (m.cols() != v.dim)
        throw ShapeError("mat_vec shape mismatch");
    std::map<Index, std::vector<std::pair<Index, const Rat*>>> m_by_col;
    for (const auto& [rc, val] : m.entries())
        m_by_col[rc.second].emplace_back(rc.first, &val);
    SparseVec out(m.rows());
    for (const auto& [j, vj] : v.entries) {
        const auto it = m_by_col.find(j);
        if (it == m_by_col.end())
            continue;
        for (const auto& [row, mval] : it->second)
            out.add_at(row, *mval * vj);
    }
    return out;
}

SparseVec vec_column_major(const SparseMat& m) {
    const Index bound = config().index_bound;
    if (m.cols() != 0 && m.rows() > bound / std::max<Index>(m.cols(), 1))
        throw OverflowError("flattened length exceeds index bound");
    SparseVec v(m.rows() * m.cols());
    for (const auto& [rc, val] : m.entries())
        v.entries.emplace(rc.second * m.rows() + rc.first, val);
    return v;
}

SparseMat unvec_column_major(const SparseVec& v, Index rows, Index cols) {
    if (v.dim != rows * cols)
        throw ShapeError("unvec: length " + std::to_string(v.dim) + " != " +
                         std::to_string(rows) + "*" + std::to_string(cols));
    SparseMat out(rows, cols);
    for (const auto& [i, val] : v.entries)
        out.set(i % rows, i / rows, val);
    return out;
}

SparseVec normalize_leading(SparseVec v) {
    if (v.entries.empty())
        return v;
    const Rat lead = v.entries.begin()->second;
    for (auto& [i, val] : v.entries)
        val /= lead;
    return v;
}

namespace {

// A matrix row during elimination: (column, value) pairs sorted by column.
using Row = std::vector<std::pair<Index, Rat>>;

// Scales a row to coprime integer entries with positive leading coefficient.
void normalize_content(Row& row) {
    if (row.empty())
        return;
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [c, v] : row) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (row.front().second < 0)
        scale = -scale;
    if (scale == 1)
        return;
    for (auto& [c, v] : row)
        v *= scale;
}

// lead(r1)*r2 - lead(r2)*r1; both rows share the same leading column, which
// cancels exactly.
Row cross_eliminate(const Row& r2, const Row& r1) {
    const Rat& a = r1.front().second;
    const Rat& b = r2.front().second;
    Row out;
    out.reserve(r1.size() + r2.size());
    std::size_t i = 0, j = 0;
    while (i < r2.size() || j < r1.size()) {
        if (j == r1.size() || (i < r2.size() && r2[i].first < r1[j].first)) {
            out.emplace_back(r2[i].first, a * r2[i].second);
            ++i;
        } else if (i == r2.size() || r1[j].first < r2[i].first) {
            out.emplace_back(r1[j].first, -b * r1[j].second);
            ++j;
        } else {
            Rat v = a * r2[i].second - b * r1[j].second;
            if (v != 0)
                out.emplace_back(r2[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// row_j -= c * row_i, all columns.
void subtract_scaled(Row& rj, const Rat& c, const Row& ri) {
    Row out;
    out.reserve(rj.size() + ri.size());
    std::size_t i = 0, j = 0;
    while (j < rj.size() || i < ri.size()) {
        if (i == ri.size() || (j < rj.size() && rj[j].first < ri[i].first)) {
            out.push_back(std::move(rj[j]));
            ++j;
        } else if (j == rj.size() || ri[i].first < rj[j].first) {
            out.emplace_back(ri[i].first, -c * ri[i].second);
            ++i;
        } else {
            Rat v = rj[j].second - c * ri[i].second;
            if (v != 0)
                out.emplace_back(rj[j].first, std::move(v));
            ++i;
            ++j;
        }
    }
    rj = std::move(out);
}

struct EchelonResult {
    std::vector<Row> rows;  // pivot rows, leading columns strictly increasing
    std::vector<Index> pivots;
    std::vector<Row> tail_rows;  // rows supported entirely past pivot_limit
};

// Fraction-free forward elimination (cross-multiplication with content
// removal). Pivots are restricted to columns < pivot_limit; with `reduced`
// the pivot rows are normalized to leading 1 and fully back-substituted, so
// they form the reduced row-echelon form.
EchelonResult eliminate(std::vector<Row> input, Index pivot_limit, bool reduced) {
    std::map<Index, std::vector<Row>> buckets;
    for (auto& r : input) {
        if (r.empty())
            continue;
        normalize_content(r);
        Index lead = r.front().first;
        buckets[lead].push_back(std::move(r));
    }
    EchelonResult out;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        const Index col = it->first;
        std::vector<Row> rows = std::move(it->second);
        buckets.erase(it);
        if (col >= pivot_limit) {
            for (auto& r : rows)
                out.tail_rows.push_back(std::move(r));
            continue;
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].size() < rows[best].size())
                best = i;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == best)
                continue;
            Row r = cross_eliminate(rows[i], rows[best]);
            if (r.empty())
                continue;
            normalize_content(r);
            buckets[r.front().first].push_back(std::move(r));
        }
        out.pivots.push_back(col);
        out.rows.push_back(std::move(rows[best]));
    }
    if (reduced) {
        for (auto& r : out.rows) {
            const Rat lead = r.front().second;
            if (lead != 1)
                for (auto& [c, v] : r)
                    v /= lead;
        }
        for (std::size_t i = out.rows.size(); i-- > 0;) {
            const Index p = out.pivots[i];
            for (std::size_t j = 0; j < i; ++j) {
                Row& rj = out.rows[j];
                const auto pos = std::lower_bound(
                    rj.begin(), rj.end(), p,
                    [](const std::pair<Index, Rat>& e, Index c) { return e.first < c; });
                if (pos == rj.end() || pos->first != p)
                    continue;
                subtract_scaled(rj, pos->second, out.rows[i]);
            }
        }
    }
    return out;
}

std::vector<Row> matrix_rows(const SparseMat& a) {
    std::vector<Row> rows;
    Index current = -1;
    for (const auto& [rc, v] : a.entries()) {
        if (rc.first != current) {
            rows.emplace_back();
            current = rc.first;
        }
        rows.back().emplace_back(rc.second, v);
    }
    return rows;
}

}  // namespace

Index rank(const SparseMat& a) {
    return static_cast<Index>(eliminate(matrix_rows(a), a.cols(), false).pivots.size());
}

std::vector<SparseVec> kernel_basis(const SparseMat& a) {
    const EchelonResult ech = eliminate(matrix_rows(a), a.cols(), true);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (Index p : ech.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    // One kernel vector per free column: that coordinate 1, pivots filled in.
    std::map<Index, SparseVec> by_free;
    for (Index c = 0; c < a.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) {
            SparseVec v(a.cols());
            v.entries.emplace(c, Rat(1));
            by_free.emplace(c, std::move(v));
        }
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
        const Index p = ech.pivots[i];
        for (const auto& [c, v] : ech.rows[i])
            if (c != p)
                by_free.at(c).set(p, -v);
    }
    std::vector<SparseVec> out;
    out.reserve(by_free.size());
    for (auto& [c, v] : by_free)
        out.push_back(std::move(v));
    return out;
}

std::vector<std::optional<SparseVec>> solve_many(const SparseMat& a,
                                                 const std::vector<SparseVec>& rhs) {
    const Index limit = a.cols();
    std::map<Index, Row> rows_by_index;
    for (const auto& [rc, v] : a.entries())
        rows_by_index[rc.first].emplace_back(rc.second, v);
    for (Index k = 0; k < static_cast<Index>(rhs.size()); ++k) {
        if (rhs[k].dim != a.rows())
            throw ShapeError("solve: rhs dimension mismatch");
        for (const auto& [i, v] : rhs[k].entries)
            rows_by_index[i].emplace_back(limit + k, v);
    }
    std::vector<Row> rows;
    rows.reserve(rows_by_index.size());
    for (auto& [i, r] : rows_by_index) {
        std::sort(r.begin(), r.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(r));
    }
    const EchelonResult ech = eliminate(std::move(rows), limit, true);

    std::vector<bool> inconsistent(rhs.size(), false);
    for (const auto& r : ech.tail_rows)
        for (const auto& [c, v] : r)
            inconsistent[static_cast<std::size_t>(c - limit)] = true;
    std::vector<std::optional<SparseVec>> out(rhs.size());
    for (std::size_t k = 0; k < rhs.size(); ++k)
        if (!inconsistent[k])
            out[k] = SparseVec(limit);
    // Free variables stay zero: each pivot coordinate reads off the reduced
    // row's augmented entry.
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
        const Index p = ech.pivots[i];
        for (const auto& [c, v] : ech.rows[i])
            if (c >= limit && out[static_cast<std::size_t>(c - limit)])
                out[static_cast<std::size_t>(c - limit)]->set(p, v);
    }
    return out;
}

std::optional<SparseVec> solve(const SparseMat& a, const SparseVec& b) {
    return solve_many(a, {b})[0];
}

RowSpan::RowSpan(Index dim) : dim_(dim) {}

namespace {

Row vec_to_row(const SparseVec& v) {
    Row r;
    r.reserve(v.entries.size());
    for (const auto& [i, val] : v.entries)
        r.emplace_back(i, val);
    return r;
}

}  // namespace

bool RowSpan::insert(const SparseVec& v) {
    if (v.dim != dim_)
        throw ShapeError("RowSpan: dimension mismatch");
    Row r = vec_to_row(v);
    while (!r.empty()) {
        const auto it = rows_.find(r.front().first);
        if (it == rows_.end())
            break;
        subtract_scaled(r, r.front().second, it->second);
    }
    if (r.empty())
        return false;
    const Rat lead = r.front().second;
    if (lead != 1)
        for (auto& [c, val] : r)
            val /= lead;
    rows_.emplace(r.front().first, std::move(r));
    return true;
}

SparseVec RowSpan::reduce(const SparseVec& v) const {
    if (v.dim != dim_)
        throw ShapeError("RowSpan: dimension mismatch");
    Row r = vec_to_row(v);
    while (!r.empty()) {
        const auto it = rows_.find(r.front().first);
        if (it == rows_.end())
            break;
        subtract_scaled(r, r.front().second, it->second);
    }
    SparseVec out(dim_);
    for (auto& [i, val] : r)
        out.entries.emplace(i, std::move(val));
    return out;
}

bool RowSpan::contains(const SparseVec& v) const {
    return reduce(v).is_zero();
}

QuotientResult quotient_dim(const std::vector<SparseVec>& big,
                            const std::vector<SparseVec>& sub) {
    Index dim = -1;
    for (const auto& v : big)
        dim = v.dim;
    for (const auto& v : sub)
        dim = v.dim;
    if (dim < 0)
        return {};
    RowSpan big_span(dim);
    for (const auto& v : big)
        big_span.insert(v);
    for (const auto& v : sub)
        if (!big_span.contains(v))
            throw ContainmentError("quotient_dim: sub vector outside span(big)");
    RowSpan span(dim);
    for (const auto& v : sub)
        span.insert(v);
    QuotientResult out;
    for (const auto& v : big)
        if (span.insert(v))
            out.reps.push_back(normalize_leading(v));
    out.dim = static_cast<Index>(out.reps.size());
    return out;
}

}  // namespace coderco
