#pragma once

#include <stdexcept>
#include <string>

namespace msfdr {

enum class Errc {
    invalid_pvalue,
    length_mismatch,
    domain,
    size_guard,
    tolerance,
    invalid_argument,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace msfdr
