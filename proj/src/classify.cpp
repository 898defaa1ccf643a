#include "young_endo/classify.hpp"

#include <numeric>
#include <string>

#include "young_endo/errors.hpp"

namespace young_endo {

namespace {
void check_characteristic(int p) {
    if (p < 0 || p == 1)
        throw domain_error("characteristic must be 0 or a prime, got " +
                           std::to_string(p));
}
} // namespace

QHVerdict is_quasi_hereditary(const YoungSet& gamma, int p) {
    check_characteristic(p);
    QHVerdict verdict;
    auto supp = support(gamma);
    verdict.zeta_dom = upward_closure_dominance(supp);
    verdict.zeta_pdom =
        p == 0 ? verdict.zeta_dom : upward_closure_p_dominance(supp, p);
    verdict.quasi_hereditary = verdict.zeta_pdom == verdict.zeta_dom;
    if (!verdict.quasi_hereditary)
        for (const auto& mu : verdict.zeta_dom)
            if (verdict.zeta_pdom.count(mu) == 0) {
                verdict.witness = mu;
                break;
            }
    return verdict;
}

bool tensor_qh_closed_form(int n, int r, int p) {
    if (n < 1 || r < 1)
        throw domain_error("tensor family needs n >= 1 and r >= 1");
    check_characteristic(p);
    if (p == 0) return true;
    if (n % p == 0) return false;
    return n < 2 * p || (n > 2 * p && r < p);
}

bool partition_algebra_qh(int r, int n, int p) {
    if (r < 1 || n < 1)
        throw domain_error("partition algebra needs r >= 1 and n >= 1");
    check_characteristic(p);
    if (p == 0) return true;
    return std::gcd(n, p) == 1 && r < p;
}

} // namespace young_endo
