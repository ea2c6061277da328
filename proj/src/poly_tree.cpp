#include "anemiadx/poly_tree.hpp"

#include <stdexcept>

namespace anemiadx {

double quad6(std::span<const double, 6> a, double x1, double x2) {
    return a[0] + a[1] * x1 + a[2] * x2 + a[3] * x1 * x2 + a[4] * x1 * x1 +
           a[5] * x2 * x2;
}

namespace {

// Slot positions (into the six-term layout 1,x1,x2,x1x2,x1^2,x2^2) of each
// reduced form's terms, in the form's printed coefficient order.
const std::array<std::vector<int>, kBasisFormCount> kFormSlots = {{
    {0, 1, 2, 3},       // 1
    {0, 1, 2},          // 2
    {0, 1, 2, 4, 5},    // 3
    {0, 1, 3, 4},       // 4
    {0, 1, 5},          // 5
    {0, 1, 2, 4},       // 6
    {0, 1, 4, 5},       // 7
    {0, 4, 5},          // 8
    {0, 1, 2, 3, 4, 5}, // 9
    {0, 1, 2, 3, 4},    // 10
    {0, 1, 3, 4, 5},    // 11
    {0, 3, 4, 5},       // 12
    {0, 1, 3, 5},       // 13
    {0, 1, 3},          // 14
    {0, 3},             // 15
    {0, 3, 4},          // 16
}};

const std::vector<int>& form_slots(int form_id) {
    if (form_id < 1 || form_id > kBasisFormCount) {
        throw std::invalid_argument("basis form id must be in 1..16, got " +
                                    std::to_string(form_id));
    }
    return kFormSlots[static_cast<std::size_t>(form_id - 1)];
}

} // namespace

int basis_term_count(int form_id) {
    return static_cast<int>(form_slots(form_id).size());
}

std::array<double, 6> basis_to_quad6(const BasisPoly& poly) {
    const auto& slots = form_slots(poly.form_id);
    if (poly.coefficients.size() != slots.size()) {
        throw std::invalid_argument(
            "form " + std::to_string(poly.form_id) + " takes " +
            std::to_string(slots.size()) + " coefficients, got " +
            std::to_string(poly.coefficients.size()));
    }
    std::array<double, 6> a{};
    for (std::size_t i = 0; i < slots.size(); ++i) {
        a[static_cast<std::size_t>(slots[i])] = poly.coefficients[i];
    }
    return a;
}

double eval_basis(const BasisPoly& poly, double x1, double x2) {
    std::array<double, 6> a = basis_to_quad6(poly);
    return quad6(a, x1, x2);
}

namespace {

// Leaf slot assignments per scheme id. Balanced rows read
// f1(f2(L[0],L[1]), f3(L[2],L[3])); left-deep rows read
// f1(f2(f3(L[0],L[1]), L[2]), L[3]).
struct SchemeRow {
    bool balanced;
    std::array<int, 4> leaves;
};

constexpr std::array<SchemeRow, kSchemeCount> kSchemes = {{
    {true, {0, 1, 2, 3}},  // 0: f1(f2(RBC,Hb), f3(HCT,MCV))
    {true, {0, 2, 1, 3}},  // 1: f1(f2(RBC,HCT), f3(Hb,MCV))
    {true, {0, 3, 1, 2}},  // 2: f1(f2(RBC,MCV), f3(Hb,HCT))
    {false, {0, 1, 2, 3}}, // 3: f1(f2(f3(RBC,Hb),HCT),MCV)
    {false, {0, 1, 3, 2}}, // 4: f1(f2(f3(RBC,Hb),MCV),HCT)
    {false, {0, 2, 1, 3}}, // 5: f1(f2(f3(RBC,HCT),Hb),MCV)
    {false, {0, 2, 3, 1}}, // 6: f1(f2(f3(RBC,HCT),MCV),Hb)
    {false, {0, 3, 1, 2}}, // 7: f1(f2(f3(RBC,MCV),Hb),HCT)
    {false, {0, 3, 2, 1}}, // 8: f1(f2(f3(RBC,MCV),HCT),Hb)
    {false, {1, 2, 0, 3}}, // 9: f1(f2(f3(Hb,HCT),RBC),MCV)
    {false, {1, 2, 3, 0}}, // 10: f1(f2(f3(Hb,HCT),MCV),RBC)
    {false, {1, 3, 0, 2}}, // 11: f1(f2(f3(Hb,MCV),RBC),HCT)
    {false, {1, 3, 2, 0}}, // 12: f1(f2(f3(Hb,MCV),HCT),RBC)
    {false, {2, 3, 0, 1}}, // 13: f1(f2(f3(HCT,MCV),RBC),Hb)
    {false, {2, 3, 1, 0}}, // 14: f1(f2(f3(HCT,MCV),Hb),RBC)
}};

constexpr std::array<const char*, 4> kSlotNames = {"RBC", "Hb", "HCT", "MCV"};

} // namespace

TreeScheme decode_scheme(int id) {
    if (id < 0 || id >= kSchemeCount) {
        throw std::invalid_argument("scheme id must be in 0..14, got " +
                                    std::to_string(id));
    }
    const SchemeRow& row = kSchemes[static_cast<std::size_t>(id)];
    return TreeScheme{id, row.balanced, row.leaves};
}

std::string scheme_function_string(int id) {
    TreeScheme s = decode_scheme(id);
    auto name = [](int slot) { return std::string(kSlotNames[static_cast<std::size_t>(slot)]); };
    if (s.balanced) {
        return "f1(f2(" + name(s.leaves[0]) + "," + name(s.leaves[1]) + "),f3(" +
               name(s.leaves[2]) + "," + name(s.leaves[3]) + "))";
    }
    return "f1(f2(f3(" + name(s.leaves[0]) + "," + name(s.leaves[1]) + ")," +
           name(s.leaves[2]) + ")," + name(s.leaves[3]) + ")";
}

std::span<const double, 6> TreeGenome::node_coefficients(int node) const {
    if (node < 1 || node > 3) {
        throw std::invalid_argument("node must be 1..3");
    }
    return std::span<const double, 6>(
        coefficients.data() + static_cast<std::size_t>(node - 1) * 6, 6);
}

double eval_tree(const TreeGenome& genome, const std::array<double, 4>& inputs) {
    if (genome.scheme_id < 0 || genome.scheme_id >= kSchemeCount) {
        throw std::invalid_argument("scheme id must be in 0..14, got " +
                                    std::to_string(genome.scheme_id));
    }
    const SchemeRow& s = kSchemes[static_cast<std::size_t>(genome.scheme_id)];
    auto f1 = genome.node_coefficients(1);
    auto f2 = genome.node_coefficients(2);
    auto f3 = genome.node_coefficients(3);
    double a = inputs[static_cast<std::size_t>(s.leaves[0])];
    double b = inputs[static_cast<std::size_t>(s.leaves[1])];
    double c = inputs[static_cast<std::size_t>(s.leaves[2])];
    double d = inputs[static_cast<std::size_t>(s.leaves[3])];
    if (s.balanced) {
        double v2 = quad6(f2, a, b);
        double v3 = quad6(f3, c, d);
        return quad6(f1, v2, v3);
    }
    double v3 = quad6(f3, a, b);
    double v2 = quad6(f2, v3, c);
    return quad6(f1, v2, d);
}

std::vector<double> to_genome_vector(const TreeGenome& genome) {
    std::vector<double> v(kCoefficientCount + 1);
    for (int i = 0; i < kCoefficientCount; ++i) {
        v[static_cast<std::size_t>(i)] = genome.coefficients[static_cast<std::size_t>(i)];
    }
    v[kCoefficientCount] = static_cast<double>(genome.scheme_id);
    return v;
}

TreeGenome genome_from_vector(std::span<const double> values) {
    if (values.size() != kCoefficientCount + 1) {
        throw std::invalid_argument("genome vector must have 19 fields");
    }
    TreeGenome g;
    for (int i = 0; i < kCoefficientCount; ++i) {
        g.coefficients[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(i)];
    }
    g.scheme_id = static_cast<int>(values[kCoefficientCount]);
    return g;
}

} // namespace anemiadx
