#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rodwave {

enum class Method { SineGordon, Mefm };
enum class Variant { Tanh, Coth, Tan, Exp, Rational };
/// Sign of the dependent lambda or mu where a closed form carries a ±.
enum class Branch { Plus, Minus };

enum class Classification {
    Topological,
    Singular,
    CompoundTopologicalNontopological,
    CompoundSingular,
    SolitonLike,
    SingularPeriodic,
    Exponential,
    Rational,
};

struct FamilyId {
    Method method = Method::SineGordon;
    int case_no = 1;
    Variant variant = Variant::Tanh;
    Branch branch = Branch::Plus;

    auto operator<=>(const FamilyId&) const = default;

    double sign() const { return branch == Branch::Plus ? 1.0 : -1.0; }
};

/// "sg.case1.tanh.plus", "mefm.case13.exp.minus", ...
std::string to_string(const FamilyId& id);
std::string to_string(Method m);
std::string to_string(Variant v);
std::string to_string(Branch b);
std::string to_string(Classification c);

/// Inverse of to_string(FamilyId). Throws UnknownFamily for malformed text or a
/// combination that is not in the registry.
FamilyId parse_family_id(std::string_view text);

struct FamilyInfo {
    FamilyId id;
    Classification classification;
    std::vector<std::string> free_parameters;
    std::string constraint;
};

/// Every published (method, case, variant, branch) combination, ordered by
/// (method, case_no, variant, branch).
const std::vector<FamilyInfo>& list_families();

/// Registry lookup; nullopt if the combination is not published.
std::optional<FamilyInfo> find_family(const FamilyId& id);

}  // namespace rodwave
