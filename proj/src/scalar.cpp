#include "bihom/scalar.hpp"

namespace bihom {

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw Error("scalar: empty literal");
    size_t slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw Error("scalar: bad literal '" + text + "'");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw Error("scalar: bad literal '" + text + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw Error("scalar: bad literal '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        Scalar s;
        s.v_ = mpq_class(text);
        return s;
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    Scalar s;
    s.v_ = mpq_class(num + "/" + den);
    if (s.v_.get_den() == 0) throw Error("scalar: zero denominator in '" + text + "'");
    s.v_.canonicalize();
    return s;
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace bihom
