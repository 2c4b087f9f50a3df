#include "coderco/config.hpp"

namespace coderco {

Config& config() {
    static Config instance;
    return instance;
}

}  // namespace coderco
