#include "homcat/field.hpp"

namespace homcat {

Field Field::prime(unsigned long p) {
    mpz_class n(static_cast<long>(p));
    if (p < 2 || mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
    return Field{Kind::PrimeField, p};
}

mpq_class Field::reduce(const mpq_class& x) const {
    if (kind == Kind::Rationals) return x;
    mpz_class pp(static_cast<long>(p));
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
    if (den != 1) {
        mpz_class d, dinv;
        mpz_mod(d.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
        if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t()) == 0)
            throw std::domain_error("denominator divisible by characteristic");
        r = r * dinv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t());
    }
    return mpq_class(r);
}

mpq_class Field::inv(const mpq_class& a) const {
    mpq_class x = reduce(a);
    if (is_zero(x)) throw std::domain_error("division by zero");
    if (kind == Kind::Rationals) return 1 / x;
    mpz_class pp(static_cast<long>(p)), r;
    mpz_class num = x.get_num();
    mpz_invert(r.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
    return mpq_class(r);
}

bool Field::is_square(const mpq_class& x) const {
    mpq_class v = reduce(x);
    if (is_zero(v)) return true;
    if (kind == Kind::Rationals) {
        if (sgn(v) < 0) return false;
        mpz_class num = v.get_num(), den = v.get_den();
        return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
    }
    // Fp: scan is fine, p stays small in this toolkit.
    mpz_class pp(static_cast<long>(p)), target = v.get_num();
    for (unsigned long t = 0; t < p; ++t) {
        mpz_class sq((static_cast<long>(t)));
        sq = sq * sq;
        mpz_mod(sq.get_mpz_t(), sq.get_mpz_t(), pp.get_mpz_t());
        if (sq == target) return true;
    }
    return false;
}

mpq_class Field::parse(const std::string& s) const {
    mpq_class x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad field element: '" + s + "'");
    x.canonicalize();
    return reduce(x);
}

std::string Field::describe() const {
    return kind == Kind::Rationals ? "Q" : ("F" + std::to_string(p));
}

}  // namespace homcat
