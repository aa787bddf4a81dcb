#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetagrp/finabgrp.hpp"
#include "thetagrp/integer.hpp"

namespace thetagrp::inv {

using group::AbGroupStructure;

enum class Family { KUM, OG6, RANK4_KUM2 };

std::string to_string(Family f);

/// Discrete data of a primitive line bundle (or, for RANK4_KUM2, of det F).
/// For RANK4_KUM2, q is e = q_M(h) and div is 2.
struct LineBundleInvariants {
    Family family = Family::KUM;
    std::int64_t n = 0;   // KUM only
    std::int64_t div = 1;
    std::int64_t q = 0;

    static LineBundleInvariants kum(std::int64_t n, std::int64_t div, std::int64_t q);
    static LineBundleInvariants og6(std::int64_t div, std::int64_t q);
    static LineBundleInvariants rank4(std::int64_t e);

    void validate() const;
};

struct ThetaReport {
    LineBundleInvariants input;
    std::optional<std::int64_t> div0;   // KUM
    std::optional<std::int64_t> m;      // KUM
    std::optional<std::int64_t> a;      // RANK4: e = 16a - 6
    AbGroupStructure cokernel;
    bool is_heisenberg = false;
    std::optional<Int> h0;
    std::optional<Int> multiplicity;
};

std::int64_t div0_kum(std::int64_t n, std::int64_t div);
std::int64_t m_kum(std::int64_t n, std::int64_t q, std::int64_t div0);

AbGroupStructure kum_cokernel(std::int64_t n, std::int64_t div, std::int64_t q);

/// Class-based route for L = mu(l) + x delta with l of elementary divisors a1 | a2.
AbGroupStructure kum_cokernel_from_class(std::int64_t n, std::int64_t a1, std::int64_t a2,
                                         std::int64_t x);

AbGroupStructure og6_cokernel(std::int64_t div, std::int64_t q);

/// e = 16a - 6 > 0.
AbGroupStructure rank4_cokernel(std::int64_t e);
std::int64_t rank4_a(std::int64_t e);

/// The explicit Heisenberg criteria, stated without reference to the cokernel.
bool kum_heisenberg_criterion(std::int64_t n, std::int64_t div, std::int64_t q);
bool og6_heisenberg_criterion(std::int64_t div, std::int64_t q);
bool rank4_heisenberg_criterion(std::int64_t e);

Int riemann_roch(const LineBundleInvariants& inv);

/// Dimension of the Schroedinger representation of the family's Heisenberg group.
std::int64_t rep_dim(const LineBundleInvariants& inv);

ThetaReport theta_report(const LineBundleInvariants& inv);

/// Report for L = mu(l) + x delta on Kum_n with l of elementary divisors a1 | a2.
ThetaReport theta_report_from_class(std::int64_t n, std::int64_t a1, std::int64_t a2,
                                    std::int64_t x);

struct SweepResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0; }
};

/// The module's property suites (criterion agreement, three-way Kummer agreement,
/// OG6 model agreement, Riemann-Roch divisibility, RANK4 consistency).
std::vector<SweepResult> run_sweeps();

} // namespace thetagrp::inv
