#include "thetagrp/invariants.hpp"

#include "thetagrp/errors.hpp"

namespace thetagrp::inv {

using group::AbGroupStructure;

std::string to_string(Family f)
{
    switch (f) {
    case Family::KUM: return "KUM";
    case Family::OG6: return "OG6";
    case Family::RANK4_KUM2: return "RANK4_KUM2";
    }
    return "?";
}

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

bool og6_pair_valid(std::int64_t div, std::int64_t q)
{
    if (q % 2 != 0) return false;
    if (div == 1) return true;
    if (div != 2) return false;
    const std::int64_t r = mod64(q, 8);
    return r == 6 || r == 4;
}

} // namespace

LineBundleInvariants LineBundleInvariants::kum(std::int64_t n, std::int64_t div, std::int64_t q)
{
    LineBundleInvariants inv{Family::KUM, n, div, q};
    inv.validate();
    return inv;
}

LineBundleInvariants LineBundleInvariants::og6(std::int64_t div, std::int64_t q)
{
    LineBundleInvariants inv{Family::OG6, 0, div, q};
    inv.validate();
    return inv;
}

LineBundleInvariants LineBundleInvariants::rank4(std::int64_t e)
{
    LineBundleInvariants inv{Family::RANK4_KUM2, 2, 2, e};
    inv.validate();
    return inv;
}

void LineBundleInvariants::validate() const
{
    switch (family) {
    case Family::KUM: {
        require(n >= 2, "KUM: n must be >= 2");
        require(q % 2 == 0, "KUM: q must be even, got " + std::to_string(q));
        require(div >= 1 && (2 * (n + 1)) % div == 0,
                "KUM: div " + std::to_string(div) + " does not divide 2(n+1) = " +
                    std::to_string(2 * (n + 1)));
        const std::int64_t d0 = div0_kum(n, div);
        require(q % (2 * d0) == 0, "KUM: 2*div0 = " + std::to_string(2 * d0) +
                                       " does not divide q = " + std::to_string(q));
        break;
    }
    case Family::OG6:
        require(q % 2 == 0, "OG6: q must be even, got " + std::to_string(q));
        require(div == 1 || div == 2, "OG6: div must be 1 or 2, got " + std::to_string(div));
        require(og6_pair_valid(div, q), "OG6: div 2 requires q = -2 or -4 mod 8, got q = " +
                                            std::to_string(q));
        break;
    case Family::RANK4_KUM2:
        require(div == 2, "RANK4: div must be 2");
        require(q > 0, "RANK4: e must be positive, got " + std::to_string(q));
        require(mod64(q, 16) == 10, "RANK4: e = " + std::to_string(q) + " is not -6 mod 16");
        break;
    }
}

std::int64_t div0_kum(std::int64_t n, std::int64_t div)
{
    require(n >= 2, "div0: n must be >= 2");
    require(div >= 1 && (2 * (n + 1)) % div == 0, "div0: div must divide 2(n+1)");
    if (ord2(Int(n + 1)) >= ord2(Int(div))) return div;
    return div / 2;
}

std::int64_t m_kum(std::int64_t n, std::int64_t q, std::int64_t div0)
{
    require(div0 >= 1 && q % (2 * div0) == 0, "m: 2*div0 must divide q");
    return gcd64(n + 1, abs64(q / (2 * div0)));
}

AbGroupStructure kum_cokernel(std::int64_t n, std::int64_t div, std::int64_t q)
{
    LineBundleInvariants::kum(n, div, q);
    const std::int64_t d0 = div0_kum(n, div);
    const std::int64_t m = m_kum(n, q, d0);
    return AbGroupStructure::from_cyclic_orders({d0, d0, m, m});
}

AbGroupStructure kum_cokernel_from_class(std::int64_t n, std::int64_t a1, std::int64_t a2,
                                         std::int64_t x)
{
    require(n >= 2, "class route: n must be >= 2");
    require(a1 >= 1 && a2 >= 1 && a2 % a1 == 0, "class route: need 1 <= a1 | a2");
    require(gcd64(a1, x) == 1, "class route: gcd(a1, x) must be 1 (primitivity)");
    const std::int64_t b1 = gcd64(n + 1, a1);
    const std::int64_t b2 = gcd64(n + 1, a2);
    AbGroupStructure s = AbGroupStructure::from_cyclic_orders({b1, b1, b2, b2});
    const AbGroupStructure via_div = kum_cokernel(n, gcd64(2 * (n + 1), a1), 2 * a1 * a2);
    ensure(s == via_div, "class route " + s.str() + " disagrees with (div, q) route " +
                             via_div.str());
    return s;
}

AbGroupStructure og6_cokernel(std::int64_t div, std::int64_t q)
{
    LineBundleInvariants::og6(div, q);
    if (div == 2) return AbGroupStructure{{2, 2, 2, 2, 2, 2, 2, 2}};
    if (q % 4 == 0) return AbGroupStructure{{2, 2, 2, 2}};
    return {};
}

std::int64_t rank4_a(std::int64_t e)
{
    LineBundleInvariants::rank4(e);
    return (e + 6) / 16;
}

AbGroupStructure rank4_cokernel(std::int64_t e)
{
    const std::int64_t a = rank4_a(e);
    ensure((e % 3 == 0) == (a % 3 == 0), "rank4: 3 | e and 3 | a disagree");
    if (e % 3 == 0) return AbGroupStructure{{3, 3}};
    return {};
}

bool kum_heisenberg_criterion(std::int64_t n, std::int64_t div, std::int64_t q)
{
    const bool cond1 = div == 1 || (div == 2 && n % 2 == 0);
    const bool cond2 = gcd64(n + 1, abs64(q / 2)) == 1;
    return cond1 && cond2;
}

bool og6_heisenberg_criterion(std::int64_t div, std::int64_t q) { return div == 1 && q % 4 != 0; }

bool rank4_heisenberg_criterion(std::int64_t e) { return e % 3 != 0; }

Int riemann_roch(const LineBundleInvariants& inv)
{
    inv.validate();
    require(inv.q > 0, "riemann_roch: q must be positive (ample class), got " +
                           std::to_string(inv.q));
    switch (inv.family) {
    case Family::KUM: {
        const auto e = static_cast<unsigned long>(inv.q / 2);
        const auto n = static_cast<unsigned long>(inv.n);
        return Int(inv.n + 1) * binomial(e + n, n);
    }
    case Family::OG6: {
        const auto e = static_cast<unsigned long>(inv.q / 2);
        return 4 * binomial(e + 3, 3);
    }
    case Family::RANK4_KUM2: {
        const auto a = static_cast<unsigned long>((inv.q + 6) / 16);
        return 3 * binomial(a + 2, 2);
    }
    }
    throw InternalError("riemann_roch: unknown family");
}

std::int64_t rep_dim(const LineBundleInvariants& inv)
{
    switch (inv.family) {
    case Family::KUM: return (inv.n + 1) * (inv.n + 1);
    case Family::OG6: return 16;
    case Family::RANK4_KUM2: return 9;
    }
    throw InternalError("rep_dim: unknown family");
}

ThetaReport theta_report(const LineBundleInvariants& inv)
{
    inv.validate();
    ThetaReport r;
    r.input = inv;
    bool criterion = false;
    switch (inv.family) {
    case Family::KUM:
        r.div0 = div0_kum(inv.n, inv.div);
        r.m = m_kum(inv.n, inv.q, *r.div0);
        r.cokernel = kum_cokernel(inv.n, inv.div, inv.q);
        criterion = kum_heisenberg_criterion(inv.n, inv.div, inv.q);
        break;
    case Family::OG6:
        r.cokernel = og6_cokernel(inv.div, inv.q);
        criterion = og6_heisenberg_criterion(inv.div, inv.q);
        break;
    case Family::RANK4_KUM2:
        r.a = rank4_a(inv.q);
        r.cokernel = rank4_cokernel(inv.q);
        criterion = rank4_heisenberg_criterion(inv.q);
        break;
    }
    r.is_heisenberg = r.cokernel.is_trivial();
    ensure(criterion == r.is_heisenberg, "theta_report: Heisenberg criterion disagrees with cokernel " +
                                             r.cokernel.str());
    if (inv.q > 0) {
        r.h0 = riemann_roch(inv);
        if (r.is_heisenberg) {
            const Int dim = rep_dim(inv);
            ensure(divides(dim, *r.h0), "theta_report: h0 = " + r.h0->get_str() +
                                            " is not a multiple of the representation dimension");
            r.multiplicity = *r.h0 / dim;
        }
    }
    return r;
}

ThetaReport theta_report_from_class(std::int64_t n, std::int64_t a1, std::int64_t a2, std::int64_t x)
{
    ThetaReport r;
    r.cokernel = kum_cokernel_from_class(n, a1, a2, x);
    const std::int64_t div = gcd64(2 * (n + 1), a1);
    const std::int64_t q = 2 * a1 * a2 - 2 * (n + 1) * x * x;
    r.input = LineBundleInvariants{Family::KUM, n, div, q};
    r.div0 = gcd64(n + 1, a1);
    r.m = gcd64(n + 1, a2);
    ensure(*r.div0 == div0_kum(n, div), "theta_report_from_class: b1 != div0");
    r.is_heisenberg = r.cokernel.is_trivial();
    ensure(r.is_heisenberg == kum_heisenberg_criterion(n, div, q),
           "theta_report_from_class: Heisenberg criterion disagrees with class route");
    if (q > 0) {
        const Int e = q / 2;
        r.h0 = Int(n + 1) * binomial(e.get_ui() + static_cast<unsigned long>(n),
                                     static_cast<unsigned long>(n));
        if (r.is_heisenberg) {
            const Int dim = (n + 1) * (n + 1);
            ensure(divides(dim, *r.h0), "theta_report_from_class: h0 not a multiple of (n+1)^2");
            r.multiplicity = *r.h0 / dim;
        }
    }
    return r;
}

} // namespace thetagrp::inv
