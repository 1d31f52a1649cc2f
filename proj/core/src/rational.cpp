#include "segre/rational.hpp"

namespace segre {

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in rational '" + text + "'");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw parse_error("invalid rational '" + text + "': " + e.what());
    }
}

std::string rational_to_string(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace segre
