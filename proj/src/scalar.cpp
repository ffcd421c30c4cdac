#include "tgraded/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace tgraded {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    const auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("malformed rational: " + s);
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + s);
        }
    };
    mpz_class num, den(1);
    if (slash == std::string::npos) {
        check_int(s);
        num.set_str(s[0] == '+' ? s.substr(1) : s, 10);
    } else {
        const std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        check_int(n);
        check_int(d);
        num.set_str(n[0] == '+' ? n.substr(1) : n, 10);
        den.set_str(d[0] == '+' ? d.substr(1) : d, 10);
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    }
    return Scalar(mpq_class(num, den));
}

std::string Scalar::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace tgraded
