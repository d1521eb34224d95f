#include "ruin/rational.hpp"

#include <ostream>

namespace ruin {

BigRational BigRational::from_string(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return BigRational(BigInt(std::string(text)));
        }
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        return BigRational(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational literal: " + std::string(text));
    }
}

std::string BigRational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.str();
}

}  // namespace ruin
