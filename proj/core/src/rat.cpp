#include "prym/rat.hpp"

namespace prym {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw std::invalid_argument("bad rational literal: " + s);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& r) {
    Rat q = r;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_to_string(const Int& n) { return n.get_str(); }

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace prym
