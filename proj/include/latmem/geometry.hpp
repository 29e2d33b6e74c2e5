#pragma once

#include <variant>

#include "latmem/lattice.hpp"

namespace latmem {

// E(D, c) = {x : (x-c)^T D^{-1} (x-c) <= 1}; scaling r*E = E(r^2 D, c).
struct Ellipsoid {
    RatMatrix d;
    RatVector c;
    Ellipsoid(RatMatrix d_, RatVector c_);
    std::size_t dim() const { return c.size(); }
};

// {x : A x <= b} with integer data; rows of A are the constraint normals.
struct Polytope {
    IntMatrix a;
    IntVector b;
    Polytope(IntMatrix a_, IntVector b_);
    std::size_t dim() const { return a.cols(); }
    std::size_t constraints() const { return a.rows(); }
    bool contains(const IntVector& x) const;
    bool contains(const RatVector& x) const;
};

// {x in R^m : F(x) < 0} with
//   F(x) = alpha_pow_den * || V^{-1} ((x, 0^{n-m}) - t) ||_p^p - alpha_pow_num,
// i.e. the p-th power of the ball radius is the rational
// alpha_pow_num / alpha_pow_den. Integer p >= 2 keeps everything rational.
struct LpBody {
    unsigned long p;
    RatMatrix v_inv;  // n x n, nonsingular
    RatVector t;      // n
    Int alpha_pow_num;
    Int alpha_pow_den;
    std::size_t m;  // active dimension

    LpBody(unsigned long p_, RatMatrix v_inv_, RatVector t_, Int alpha_pow_num_,
           Int alpha_pow_den_, std::size_t m_);
    // Radius given as a plain rational alpha = alpha_n / alpha_d (raised to
    // the p-th power internally).
    static LpBody from_radius(unsigned long p, RatMatrix v_inv, RatVector t, const Rat& alpha,
                              std::size_t m);
    std::size_t ambient_dim() const { return t.size(); }
    bool contains(const IntVector& x) const;
    bool contains(const RatVector& x) const;
};

using ConvexBody = std::variant<Polytope, LpBody>;

std::size_t body_active_dim(const ConvexBody& body);
bool body_contains(const ConvexBody& body, const IntVector& x);

struct SupportData {
    Rat center;    // <d, c>
    Rat radicand;  // d^T D d; support values are center +- sqrt(radicand)
};
SupportData ellipsoid_support(const Ellipsoid& e, const IntVector& d);

Rat lp_f_value(const LpBody& body, const RatVector& y);
RatVector lp_subgradient(const LpBody& body, const RatVector& y);

enum class SeparationKind {
    Inside,      // F(y) < 0
    Separating,  // g with <g, x> < <g, y> for all x in the body
    EmptyBody,   // F(y) >= 0 with zero subgradient: F attains its minimum >= 0
};
struct Separation {
    SeparationKind kind;
    RatVector g;
};
Separation lp_separate_ex(const LpBody& body, const RatVector& y);
// Throwing variant: ZeroSubgradientOutside in the EmptyBody case.
std::optional<RatVector> lp_separate(const LpBody& body, const RatVector& y);

// Rational upper bound on the squared circumscribed-ball radius
// (alpha sqrt(n) ||V||)^2, via the Frobenius bound on ||V||.
Rat lp_circumscribed_radius_sq(const LpBody& body);
// Center of that ball: orthogonal projection of t onto the active coordinates.
RatVector lp_circumscribed_center(const LpBody& body);

// Ball radius the body must contain around any integer point it contains;
// S bounds the sizes of V^{-1}, t and the radius-power pair, R bounds the
// circumscribed radius.
Rat lp_volume_floor(const LpBody& body, const Int& s_bound, const Rat& r_out);

struct PolytopeBounds {
    Int t_box;       // |x_i| <= t_box for all x in P
    Rat h_inner_sq;  // squared inradius of the beta-normalized symmetric form
};
PolytopeBounds polytope_bounds(const Polytope& p);

// All vertices by basic-solution enumeration; desk-scale instances only
// (throws BudgetExceeded beyond max_subsets constraint subsets). Vertices of
// the recession-free part only; meaningful for bounded polytopes.
std::vector<RatVector> polytope_vertices(const Polytope& p, std::uint64_t max_subsets = 200000);

Int size_of(const Polytope& p);
Int size_of(const LpBody& body);

}  // namespace latmem
