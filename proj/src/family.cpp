#include "rodwave/family.hpp"

#include "rodwave/errors.hpp"

#include <algorithm>
#include <array>

namespace rodwave {

namespace {

constexpr const char* kTanhGate = "sigma != 0 and tau^2 - 4 sigma > 0";
constexpr const char* kTanGate = "sigma != 0 and tau^2 - 4 sigma < 0";
constexpr const char* kExpGate = "sigma = 0 and tau != 0";

std::vector<FamilyInfo> build_registry()
{
    std::vector<FamilyInfo> out;
    auto add_both = [&](FamilyId id, Classification c, std::vector<std::string> free, std::string gate) {
        for (Branch b : {Branch::Plus, Branch::Minus}) {
            id.branch = b;
            out.push_back({id, c, free, gate});
        }
    };

    for (int n = 1; n <= 6; ++n) {
        const bool compound = n >= 3;
        add_both({Method::SineGordon, n, Variant::Tanh, Branch::Plus},
                 compound ? Classification::CompoundTopologicalNontopological : Classification::Topological,
                 {"mu"}, "denominators of the coefficient set non-zero");
        add_both({Method::SineGordon, n, Variant::Coth, Branch::Plus},
                 compound ? Classification::CompoundSingular : Classification::Singular, {"mu"},
                 "denominators of the coefficient set non-zero");
    }

    const std::vector<std::string> free_mu_dependent{"lambda", "tau", "sigma", "e", "Q0", "Q1"};
    for (int n : {7, 8}) {
        add_both({Method::Mefm, n, Variant::Tanh, Branch::Plus}, Classification::SolitonLike, free_mu_dependent,
                 kTanhGate);
        add_both({Method::Mefm, n, Variant::Tan, Branch::Plus}, Classification::SingularPeriodic,
                 free_mu_dependent, kTanGate);
    }
    for (int n : {9, 10}) {
        add_both({Method::Mefm, n, Variant::Tanh, Branch::Plus}, Classification::SolitonLike,
                 {"mu", "tau", "sigma", "e", "Q1"}, kTanhGate);
        add_both({Method::Mefm, n, Variant::Rational, Branch::Plus}, Classification::Rational,
                 {"mu", "tau", "sigma", "Q1"}, kTanGate);
    }
    const std::vector<std::string> free_both_dependent{"tau", "sigma", "e", "Q0", "Q1"};
    for (int n : {11, 12}) {
        add_both({Method::Mefm, n, Variant::Tanh, Branch::Plus}, Classification::SolitonLike,
                 free_both_dependent, kTanhGate);
        add_both({Method::Mefm, n, Variant::Tan, Branch::Plus}, Classification::SingularPeriodic,
                 free_both_dependent, kTanGate);
    }
    for (int n : {13, 14})
        add_both({Method::Mefm, n, Variant::Exp, Branch::Plus}, Classification::Exponential,
                 {"mu", "tau", "e", "Q0", "Q1"}, kExpGate);
    out.push_back({{Method::Mefm, 15, Variant::Rational, Branch::Plus}, Classification::Rational,
                   {"lambda", "mu", "tau", "Q0", "Q1"}, kExpGate});

    std::sort(out.begin(), out.end(), [](const FamilyInfo& a, const FamilyInfo& b) { return a.id < b.id; });
    return out;
}

template <class Enum, std::size_t N>
std::optional<Enum> lookup(std::string_view text, const std::array<std::pair<const char*, Enum>, N>& table)
{
    for (const auto& [name, value] : table)
        if (text == name) return value;
    return std::nullopt;
}

constexpr std::array<std::pair<const char*, Variant>, 5> kVariants{{{"tanh", Variant::Tanh},
                                                                    {"coth", Variant::Coth},
                                                                    {"tan", Variant::Tan},
                                                                    {"exp", Variant::Exp},
                                                                    {"rational", Variant::Rational}}};

}  // namespace

std::string to_string(Method m) { return m == Method::SineGordon ? "sg" : "mefm"; }

std::string to_string(Variant v)
{
    for (const auto& [name, value] : kVariants)
        if (value == v) return name;
    return "?";
}

std::string to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::Topological: return "TOPOLOGICAL";
    case Classification::Singular: return "SINGULAR";
    case Classification::CompoundTopologicalNontopological: return "COMPOUND_TOPOLOGICAL_NONTOPOLOGICAL";
    case Classification::CompoundSingular: return "COMPOUND_SINGULAR";
    case Classification::SolitonLike: return "SOLITON_LIKE";
    case Classification::SingularPeriodic: return "SINGULAR_PERIODIC";
    case Classification::Exponential: return "EXPONENTIAL";
    case Classification::Rational: return "RATIONAL";
    }
    return "?";
}

std::string to_string(const FamilyId& id)
{
    return to_string(id.method) + ".case" + std::to_string(id.case_no) + "." + to_string(id.variant) + "." +
           to_string(id.branch);
}

FamilyId parse_family_id(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto dot = text.find('.', start);
        parts.push_back(text.substr(start, dot == std::string_view::npos ? dot : dot - start));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    auto fail = [&]() -> UnknownFamily { return UnknownFamily("'" + std::string(text) + "'"); };
    if (parts.size() != 4) throw fail();

    FamilyId id;
    if (parts[0] == "sg")
        id.method = Method::SineGordon;
    else if (parts[0] == "mefm")
        id.method = Method::Mefm;
    else
        throw fail();

    if (parts[1].size() < 5 || parts[1].substr(0, 4) != "case") throw fail();
    try {
        std::size_t used = 0;
        id.case_no = std::stoi(std::string(parts[1].substr(4)), &used);
        if (used != parts[1].size() - 4) throw fail();
    } catch (const std::logic_error&) {
        throw fail();
    }

    auto variant = lookup(parts[2], kVariants);
    if (!variant) throw fail();
    id.variant = *variant;

    if (parts[3] == "plus")
        id.branch = Branch::Plus;
    else if (parts[3] == "minus")
        id.branch = Branch::Minus;
    else
        throw fail();

    if (!find_family(id)) throw fail();
    return id;
}

const std::vector<FamilyInfo>& list_families()
{
    static const std::vector<FamilyInfo> registry = build_registry();
    return registry;
}

std::optional<FamilyInfo> find_family(const FamilyId& id)
{
    const auto& reg = list_families();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const FamilyInfo& f) { return f.id == id; });
    if (it == reg.end()) return std::nullopt;
    return *it;
}

}  // namespace rodwave
