#ifndef ANEMIADX_POLY_TREE_HPP
#define ANEMIADX_POLY_TREE_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

namespace anemiadx {

// The full six-term bivariate quadratic:
// a0 + a1*x1 + a2*x2 + a3*x1*x2 + a4*x1^2 + a5*x2^2.
double quad6(std::span<const double, 6> a, double x1, double x2);

inline constexpr int kBasisFormCount = 16;

// One of the 16 reduced bivariate quadratic forms. Each form is a restriction
// of the six-term polynomial to a subset of its terms; `coefficients` holds
// exactly term_count(form_id) values in the form's printed order.
struct BasisPoly {
    int form_id = 9;
    std::vector<double> coefficients;
};

int basis_term_count(int form_id);

// Maps a reduced form's coefficients into the six-term slots (absent terms
// zero-filled), so every form evaluates through the same arithmetic as the
// full polynomial and restriction identities hold exactly.
std::array<double, 6> basis_to_quad6(const BasisPoly& poly);

double eval_basis(const BasisPoly& poly, double x1, double x2);

inline constexpr int kSchemeCount = 15;

// Fixed binary-tree shape over four leaf slots. Slot order matches the model
// input order RBC, Hb, HCT, MCV. Balanced schemes compute
// f1(f2(L[0],L[1]), f3(L[2],L[3])); left-deep schemes compute
// f1(f2(f3(L[0],L[1]), L[2]), L[3]).
struct TreeScheme {
    int id = 0;
    bool balanced = false;
    std::array<int, 4> leaves{};
};

// Throws std::invalid_argument when id is outside 0..14.
TreeScheme decode_scheme(int id);

// Human-readable composition, e.g. "f1(f2(RBC,Hb),f3(HCT,MCV))".
std::string scheme_function_string(int id);

inline constexpr int kCoefficientCount = 18;

// The 19-field genome: one scheme id plus three groups of six coefficients
// for nodes f1, f2, f3 in that order.
struct TreeGenome {
    int scheme_id = 0;
    std::array<double, kCoefficientCount> coefficients{};

    std::span<const double, 6> node_coefficients(int node) const; // node 1..3

    bool operator==(const TreeGenome&) const = default;
};

// Evaluates the composed tree on four inputs (slot order RBC,Hb,HCT,MCV).
// A non-finite result signals evaluation overflow; callers map it to zero
// fitness or a prediction error.
double eval_tree(const TreeGenome& genome, const std::array<double, 4>& inputs);

// Conversions to the flat optimizer genome: 18 coefficients then the scheme
// id stored as an exact small double.
std::vector<double> to_genome_vector(const TreeGenome& genome);
TreeGenome genome_from_vector(std::span<const double> values);

} // namespace anemiadx

#endif
