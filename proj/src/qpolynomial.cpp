#include "rootpat/qpolynomial.hpp"

#include <stdexcept>

namespace rootpat {

QPolynomial QPolynomial::monomial(Var v, int e, long long c) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::vector<long long> cs(size_t(e) + 1, 0);
    cs[size_t(e)] = c;
    return QPolynomial(v, std::move(cs));
}

QPolynomial QPolynomial::count_polynomial(int e) {
    std::vector<long long> cs(size_t(e) + 2, 0);
    cs[size_t(e)] = -1;
    cs[size_t(e) + 1] = 1;
    return QPolynomial(Var::q, std::move(cs));
}

std::string QPolynomial::to_string() const {
    if (c_.empty()) return "0";
    const char v = var_ == Var::q ? 'q' : 't';
    std::string s;
    bool first = true;
    for (size_t e = 0; e < c_.size(); ++e) {
        long long c = c_[e];
        if (c == 0) continue;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0) s += std::to_string(a);
        if (e >= 1) {
            s += v;
            if (e >= 2) s += "^" + std::to_string(e);
        }
        first = false;
    }
    return s;
}

std::string format_count(int exponent) {
    if (exponent == 0) return "q-1";
    if (exponent == 1) return "q(q-1)";
    return "q^" + std::to_string(exponent) + "(q-1)";
}

std::string format_power(int exponent) {
    if (exponent == 0) return "1";
    if (exponent == 1) return "q";
    return "q^" + std::to_string(exponent);
}

}  // namespace rootpat
