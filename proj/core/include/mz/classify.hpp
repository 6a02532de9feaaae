#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mz/difference.hpp"
#include "mz/rootfind.hpp"

namespace mz {

enum class VerdictStatus { Holds, Fails, Undecided };

enum class RootSource { Single, Plus, Minus };

struct Evidence {
    ComplexRoot root;
    Membership membership = Membership::Outside;
    RootSource source = RootSource::Single;
};

/// MZ classification result with full root-level evidence: FAILS iff some
/// root is inside the annulus, HOLDS iff all are outside, UNDECIDED when a
/// boundary-ambiguous root blocks the call either way.
struct Verdict {
    VerdictStatus status = VerdictStatus::Holds;
    int n = 1;
    Annulus annulus;
    std::vector<Evidence> evidence;
    std::optional<int> detected_order;  // set by classify_difference
    int shift = 0;                      // index normalization applied, if any
    std::string note;                   // diagnostics (order mismatch, convergence)
};

enum class RecurrenceVerdict { Decays, Fails, BoundaryExact };

/// Theorem-driven verdict for a one-sided characteristic polynomial.
Verdict classify_polynomial(const Polynomial& p, const Rational& q, int n, double tol = 1e-9);

/// Two-sided verdict from both symbol polynomials; evidence is the union.
Verdict classify_symmetric(const Polynomial& r_plus, const Polynomial& r_minus,
                           const Rational& q, int n, double tol = 1e-9);

/// Routes a geometric-template operator to the one- or two-sided classifier.
/// n defaults to the detected order. Throws GeomTemplateMismatch, NoOrder.
Verdict classify_difference(const DifferenceOp& d, const Rational& q,
                            std::optional<int> n = std::nullopt, double tol = 1e-9);

/// Trichotomy for the recurrence coefficient A itself; exact comparisons.
RecurrenceVerdict classify_recurrence(const Rational& a, const Rational& q, int n);

/// Complex A in double precision; BoundaryExact when |A| is within tol of a
/// boundary and the call cannot be made.
RecurrenceVerdict classify_recurrence(Complex a, const Rational& q, int n, double tol = 1e-9);

/// First-order criterion: the difference f(2h) - A f(h) implies f'(0) for
/// continuous f iff A lies outside (1, 2].
bool first_order_criterion(const Rational& a);

const char* to_string(VerdictStatus s);
const char* to_string(RecurrenceVerdict v);
const char* to_string(RootSource s);

} // namespace mz
