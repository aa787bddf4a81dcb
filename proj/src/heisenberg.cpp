#include "thetagrp/heisenberg.hpp"

#include <numeric>
#include <sstream>

#include "thetagrp/cyclotomic.hpp"
#include "thetagrp/errors.hpp"

namespace thetagrp::heis {

// ------------------------------------------------------------ GenPermMatrix

bool GenPermMatrix::is_scalar(const QmodZ& phase) const
{
    for (std::size_t y = 0; y < dim; ++y)
        if (perm[y] != y || phases[y] != phase) return false;
    return true;
}

GenPermMatrix gpm_identity(std::size_t dim)
{
    GenPermMatrix I{dim, std::vector<std::size_t>(dim), std::vector<QmodZ>(dim)};
    std::iota(I.perm.begin(), I.perm.end(), std::size_t{0});
    return I;
}

GenPermMatrix gpm_mul(const GenPermMatrix& A, const GenPermMatrix& B)
{
    require(A.dim == B.dim, "gpm_mul: dimension mismatch");
    GenPermMatrix C{A.dim, std::vector<std::size_t>(A.dim), std::vector<QmodZ>(A.dim)};
    for (std::size_t y = 0; y < A.dim; ++y) {
        const std::size_t mid = B.perm[y];
        C.perm[y] = A.perm[mid];
        C.phases[y] = B.phases[y] + A.phases[mid];
    }
    return C;
}

GenPermMatrix gpm_inverse(const GenPermMatrix& A)
{
    GenPermMatrix R{A.dim, std::vector<std::size_t>(A.dim), std::vector<QmodZ>(A.dim)};
    for (std::size_t y = 0; y < A.dim; ++y) {
        R.perm[A.perm[y]] = y;
        R.phases[A.perm[y]] = -A.phases[y];
    }
    return R;
}

GenPermMatrix gpm_commutator(const GenPermMatrix& A, const GenPermMatrix& B)
{
    return gpm_mul(gpm_mul(A, B), gpm_mul(gpm_inverse(A), gpm_inverse(B)));
}

// ---------------------------------------------------------- HeisenbergGroup

HeisenbergGroup::HeisenbergGroup(std::vector<std::int64_t> d) : d_(std::move(d)), J_(d_)
{
    require(!d_.empty(), "heisenberg: d must be nonempty");
}

HeisElem HeisenbergGroup::identity() const { return HeisElem{QmodZ(), J_.zero(), J_.zero()}; }

HeisElem HeisenbergGroup::central(const QmodZ& t) const { return HeisElem{t, J_.zero(), J_.zero()}; }

HeisElem HeisenbergGroup::make(const QmodZ& t, GroupElement x, GroupElement f) const
{
    require(x.size() == d_.size() && f.size() == d_.size(), "heisenberg: element has wrong shape");
    return HeisElem{t, J_.reduce(std::move(x)), J_.reduce(std::move(f))};
}

void HeisenbergGroup::check(const HeisElem& a) const
{
    require(J_.contains(a.x) && J_.contains(a.f), "heisenberg: element does not match d");
}

QmodZ HeisenbergGroup::character(const GroupElement& f, const GroupElement& x) const
{
    QmodZ s;
    for (std::size_t i = 0; i < d_.size(); ++i) s += QmodZ(f[i] * x[i], d_[i]);
    return s;
}

HeisElem HeisenbergGroup::mul(const HeisElem& a, const HeisElem& b) const
{
    check(a);
    check(b);
    return HeisElem{a.scalar + b.scalar + character(b.f, a.x), J_.add(a.x, b.x), J_.add(a.f, b.f)};
}

HeisElem HeisenbergGroup::inv(const HeisElem& a) const
{
    check(a);
    // (t, x, f)(s, -x, -f) has scalar t + s - f(x).
    return HeisElem{-a.scalar + character(a.f, a.x), J_.neg(a.x), J_.neg(a.f)};
}

QmodZ HeisenbergGroup::commutator(const HeisElem& a, const HeisElem& b) const
{
    const HeisElem c = mul(mul(a, b), mul(inv(a), inv(b)));
    ensure(c.x == J_.zero() && c.f == J_.zero(), "heisenberg: commutator is not central");
    return c.scalar;
}

GenPermMatrix HeisenbergGroup::schrodinger_matrix(const HeisElem& a) const
{
    check(a);
    const auto dim = static_cast<std::size_t>(J_.size());
    GenPermMatrix M{dim, std::vector<std::size_t>(dim), std::vector<QmodZ>(dim)};
    const GroupElement minus_x = J_.neg(a.x);
    for (std::size_t z = 0; z < dim; ++z) {
        const GroupElement row = J_.add(J_.element_at(z), minus_x);
        M.perm[z] = static_cast<std::size_t>(J_.index_of(row));
        M.phases[z] = a.scalar + character(a.f, row);
    }
    return M;
}

std::uint64_t HeisenbergGroup::finite_size() const
{
    return static_cast<std::uint64_t>(exponent()) * J_.size() * J_.size();
}

HeisElem HeisenbergGroup::finite_element(std::uint64_t index) const
{
    const auto N = static_cast<std::uint64_t>(exponent());
    const std::uint64_t t = index % N;
    index /= N;
    const GroupElement x = J_.element_at(index % J_.size());
    const GroupElement f = J_.element_at(index / J_.size());
    return HeisElem{QmodZ(static_cast<std::int64_t>(t), exponent()), x, f};
}

HeisElem h_mul(const HeisenbergGroup& H, const HeisElem& a, const HeisElem& b) { return H.mul(a, b); }

HeisElem h_inv(const HeisenbergGroup& H, const HeisElem& a) { return H.inv(a); }

QmodZ h_commutator(const HeisenbergGroup& H, const HeisElem& a, const HeisElem& b)
{
    return H.commutator(a, b);
}

GenPermMatrix schrodinger_matrix(const HeisenbergGroup& H, const HeisElem& a)
{
    return H.schrodinger_matrix(a);
}

group::Pairing heis_pairing(const std::vector<std::int64_t>& d)
{
    const HeisenbergGroup H(d);
    const std::size_t g = d.size();
    std::vector<std::int64_t> orders(d);
    orders.insert(orders.end(), d.begin(), d.end());

    auto lift = [&](std::size_t i) {
        HeisElem e = H.identity();
        if (i < g)
            e.x[i] = 1;
        else
            e.f[i - g] = 1;
        return e;
    };
    std::vector<std::vector<QmodZ>> m(2 * g, std::vector<QmodZ>(2 * g));
    for (std::size_t i = 0; i < 2 * g; ++i)
        for (std::size_t j = 0; j < 2 * g; ++j) m[i][j] = H.commutator(lift(i), lift(j));
    return group::Pairing(group::FinAbGroup(std::move(orders)), std::move(m));
}

mpq_class character_norm(const std::vector<std::int64_t>& d, std::uint64_t bound)
{
    const HeisenbergGroup H(d);
    require(H.rep_dim() <= bound, "character_norm: representation dimension " +
                                      std::to_string(H.rep_dim()) + " exceeds bound " +
                                      std::to_string(bound));
    const std::int64_t N = H.exponent();
    const std::uint64_t size = H.finite_size();

    CyclotomicSum total(static_cast<std::size_t>(N));
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        const GenPermMatrix M = H.schrodinger_matrix(H.finite_element(idx));
        CyclotomicSum trace(static_cast<std::size_t>(N));
        for (std::size_t y = 0; y < M.dim; ++y) {
            if (M.perm[y] != y) continue;
            const QmodZ& ph = M.phases[y];
            ensure(N % ph.den() == 0, "character_norm: phase outside mu_N");
            trace.add_root(ph.num() * (N / ph.den()));
        }
        total += trace * trace.conj();
    }
    const std::optional<Int> sum = total.to_integer();
    ensure(sum.has_value(), "character_norm: sum of |chi|^2 is not rational");
    mpq_class r(*sum, Int(static_cast<unsigned long>(size)));
    r.canonicalize();
    return r;
}

std::int64_t schrodinger_multiplicity(std::int64_t dimV, const std::vector<std::int64_t>& d)
{
    require(dimV >= 0, "schrodinger_multiplicity: dimension must be nonnegative");
    const HeisenbergGroup H(d);
    const auto dim = static_cast<std::int64_t>(H.rep_dim());
    require(dimV % dim == 0, "schrodinger_multiplicity: dimension " + std::to_string(dimV) +
                                 " is not a multiple of " + std::to_string(dim));
    return dimV / dim;
}

// ------------------------------------------------------------------- syntax

namespace {

GroupElement parse_tuple(std::string s, std::size_t g, const std::string& whole)
{
    auto strip = [](std::string& t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(0, 1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    strip(s);
    require(s.size() >= 2 && s.front() == '(' && s.back() == ')',
            "malformed tuple in element '" + whole + "'");
    s = s.substr(1, s.size() - 2);
    GroupElement out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        strip(item);
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw DomainError("malformed integer '" + item + "' in element '" + whole + "'");
        }
        require(pos == item.size(), "malformed integer '" + item + "' in element '" + whole + "'");
        out.push_back(v);
    }
    require(out.size() == g, "element '" + whole + "' has " + std::to_string(out.size()) +
                                 " coordinates, expected " + std::to_string(g));
    return out;
}

} // namespace

HeisElem parse_elem(const HeisenbergGroup& H, const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) parts.push_back(part);
    require(parts.size() == 3, "element '" + text + "' must have the form t/u;(x1,...);(f1,...)");
    const QmodZ t = QmodZ::parse(parts[0]);
    return H.make(t, parse_tuple(parts[1], H.d().size(), text),
                  parse_tuple(parts[2], H.d().size(), text));
}

std::string format_elem(const HeisElem& a)
{
    std::ostringstream os;
    os << a.scalar.str() << ";(";
    for (std::size_t i = 0; i < a.x.size(); ++i) os << (i ? "," : "") << a.x[i];
    os << ");(";
    for (std::size_t i = 0; i < a.f.size(); ++i) os << (i ? "," : "") << a.f[i];
    os << ")";
    return os.str();
}

} // namespace thetagrp::heis
