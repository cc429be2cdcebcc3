#include "collatz/mappings.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace collatz {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t d)
{
    auto r = a % d;
    return r < 0 ? r + d : r;
}

} // namespace

MappingSpec::MappingSpec(std::string name, int modulus, std::vector<BranchRule> branches, bool bijective)
    : name_(std::move(name)), modulus_(modulus), branches_(std::move(branches)), bijective_(bijective)
{
    if (modulus_ < 2) {
        throw ConfigError("mapping '" + name_ + "': modulus d must be >= 2");
    }
    if (branches_.size() != static_cast<std::size_t>(modulus_)) {
        throw ConfigError("mapping '" + name_ + "': expected exactly d = " + std::to_string(modulus_) +
                          " branches, got " + std::to_string(branches_.size()));
    }
    std::sort(branches_.begin(), branches_.end(),
              [](const BranchRule& a, const BranchRule& b) { return a.residue < b.residue; });
    for (int i = 0; i < modulus_; ++i) {
        const auto& b = branches_[static_cast<std::size_t>(i)];
        if (b.residue != i) {
            throw ConfigError("mapping '" + name_ + "': residues must cover 0..d-1 exactly once");
        }
        if (b.multiplier == 0) {
            throw ConfigError("mapping '" + name_ + "': multiplier for residue " + std::to_string(i) +
                              " must be non-zero");
        }
        // r_i = i m_i (mod d) is what makes (m_i x - r_i)/d integral. A
        // failure here is usually an offset written with the opposite sign.
        if (floor_mod(b.offset, modulus_) != floor_mod(static_cast<std::int64_t>(i) * b.multiplier, modulus_)) {
            throw ConfigError("mapping '" + name_ + "': offset " + std::to_string(b.offset) + " for residue " +
                              std::to_string(i) + " violates r_i = i*m_i (mod d); branches are (m_i*x - r_i)/d, "
                              "check the sign convention of r_i");
        }
    }
}

MappingSpec MappingSpec::original_collatz()
{
    return MappingSpec("collatz", 3, {{0, 2, 0}, {1, 4, 1}, {2, 4, -1}}, true);
}

MappingSpec MappingSpec::three_x_plus_one()
{
    return MappingSpec("3x1", 2, {{0, 1, 0}, {1, 3, -1}});
}

MappingSpec MappingSpec::carnielli_t(int d)
{
    if (d < 2) {
        throw ConfigError("carnielli-t: d must be >= 2");
    }
    std::vector<BranchRule> rules{{0, 1, 0}};
    for (int i = 1; i < d; ++i) {
        rules.push_back({i, d + 1, -(d - i)});
    }
    return MappingSpec("carnielli-t" + std::to_string(d), d, std::move(rules));
}

MappingSpec MappingSpec::carnielli_l(int d)
{
    if (d < 2) {
        throw ConfigError("carnielli-l: d must be >= 2");
    }
    std::vector<BranchRule> rules{{0, 1, 0}};
    for (int j = 1; j < d; ++j) {
        // representative i of j in (-d/2, d/2]
        const int i = 2 * j <= d ? j : j - d;
        rules.push_back({j, d + 1, i});
    }
    return MappingSpec("carnielli-l" + std::to_string(d), d, std::move(rules));
}

MappingSpec MappingSpec::from_json(const nlohmann::json& doc)
{
    try {
        const int d = doc.at("d").get<int>();
        std::vector<BranchRule> rules;
        for (const auto& b : doc.at("branches")) {
            rules.push_back({b.at("residue").get<int>(), b.at("multiplier").get<std::int64_t>(),
                             b.at("offset").get<std::int64_t>()});
        }
        std::set<int> seen;
        for (const auto& r : rules) {
            if (r.residue < 0 || r.residue >= d || !seen.insert(r.residue).second) {
                throw ConfigError("custom mapping: residues must cover 0..d-1 exactly once");
            }
        }
        return MappingSpec(doc.value("name", std::string("custom")), d, std::move(rules),
                           doc.value("bijective", false));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("custom mapping: malformed JSON document: ") + e.what());
    }
}

nlohmann::json MappingSpec::to_json() const
{
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& b : branches_) {
        branches.push_back({{"residue", b.residue}, {"multiplier", b.multiplier}, {"offset", b.offset}});
    }
    return {{"name", name_}, {"d", modulus_}, {"branches", branches}, {"bijective", bijective_}};
}

std::vector<Rational> MappingSpec::distinct_factors() const
{
    std::vector<Rational> out;
    for (const auto& b : branches_) {
        Rational f(BigInt(b.multiplier), BigInt(modulus_));
        if (std::find(out.begin(), out.end(), f) == out.end()) {
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool MappingSpec::is_two_factor() const
{
    auto f = distinct_factors();
    return f.size() == 2 && f[0] > 1 && f[1] > 0 && f[1] < 1;
}

void MappingSpec::require_two_factor() const
{
    auto f = distinct_factors();
    if (f.size() >= 3) {
        throw ConfigError("mapping '" + name_ + "' has " + std::to_string(f.size()) +
                          " distinct factors m_i/d; only mappings with two distinct factors are supported");
    }
    if (!is_two_factor()) {
        throw ConfigError("mapping '" + name_ + "' needs one factor in (0, 1) and one above 1");
    }
}

BranchKind MappingSpec::kind(int residue) const
{
    const auto& b = branch(residue);
    return b.multiplier < modulus_ ? BranchKind::below : BranchKind::above;
}

Rational MappingSpec::below_factor() const
{
    require_two_factor();
    return distinct_factors()[1];
}

Rational MappingSpec::above_factor() const
{
    require_two_factor();
    return distinct_factors()[0];
}

int MappingSpec::above_branch_count() const
{
    return static_cast<int>(std::count_if(branches_.begin(), branches_.end(),
                                          [&](const BranchRule& b) { return b.multiplier > modulus_; }));
}

int MappingSpec::below_branch_count() const
{
    return static_cast<int>(std::count_if(branches_.begin(), branches_.end(),
                                          [&](const BranchRule& b) { return b.multiplier < modulus_; }));
}

std::optional<Rational> MappingSpec::default_constant() const
{
    if (modulus_ == 3 && std::equal(branches_.begin(), branches_.end(), original_collatz().branches_.begin())) {
        return Rational(7, 24);
    }
    if (modulus_ == 2 && std::equal(branches_.begin(), branches_.end(), three_x_plus_one().branches_.begin())) {
        return Rational(5, 12);
    }
    return std::nullopt;
}

MappingSpec mapping_preset(const std::string& name)
{
    if (name == "collatz" || name == "original" || name == "g") {
        return MappingSpec::original_collatz();
    }
    if (name == "3x1" || name == "3x+1" || name == "T") {
        return MappingSpec::three_x_plus_one();
    }
    for (const std::string prefix : {"carnielli-t", "carnielli-l"}) {
        if (name.rfind(prefix, 0) == 0) {
            const auto rest = name.substr(prefix.size());
            int d = 0;
            try {
                std::size_t used = 0;
                d = std::stoi(rest, &used);
                if (used != rest.size()) {
                    throw ConfigError("");
                }
            } catch (const std::exception&) {
                throw ConfigError("preset '" + name + "': expected " + prefix + "<d>, e.g. " + prefix + "5");
            }
            return prefix == "carnielli-t" ? MappingSpec::carnielli_t(d) : MappingSpec::carnielli_l(d);
        }
    }
    throw ConfigError("unknown problem '" + name + "' (expected collatz, 3x1, carnielli-t<d>, carnielli-l<d>)");
}

BigInt apply(const MappingSpec& spec, const BigInt& n)
{
    const auto& b = spec.branch(residue(n, spec.modulus()));
    BigInt v = b.multiplier * n - b.offset;
    return v / spec.modulus();
}

std::optional<std::int64_t> apply_checked(const MappingSpec& spec, std::int64_t n)
{
    const auto& b = spec.branch(residue(n, spec.modulus()));
    const __int128 v = (static_cast<__int128>(b.multiplier) * n - b.offset) / spec.modulus();
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(v);
}

SymbolSequence::SymbolSequence(int modulus, std::vector<int> residues)
    : modulus_(modulus), residues_(std::move(residues))
{
}

int SymbolSequence::to_display(int residue, int modulus)
{
    if (modulus == 3) {
        // n = -t (mod 3)
        return residue == 0 ? 0 : (residue == 1 ? -1 : 1);
    }
    return residue;
}

int SymbolSequence::from_display(int symbol, int modulus)
{
    if (modulus == 3) {
        return symbol == 0 ? 0 : (symbol == -1 ? 1 : 2);
    }
    return symbol;
}

std::vector<int> SymbolSequence::entries() const
{
    std::vector<int> out;
    out.reserve(residues_.size());
    for (int r : residues_) {
        out.push_back(to_display(r, modulus_));
    }
    return out;
}

Trajectory iterate(const MappingSpec& spec, const BigInt& n, std::size_t k)
{
    Trajectory t;
    t.start = n;
    t.values.reserve(k + 1);
    t.values.push_back(n);
    std::vector<int> residues;
    residues.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        residues.push_back(residue(t.values.back(), spec.modulus()));
        t.values.push_back(apply(spec, t.values.back()));
    }
    t.symbols = SymbolSequence(spec.modulus(), std::move(residues));
    return t;
}

SymbolSequence symbol_sequence(const MappingSpec& spec, const BigInt& n, std::size_t k)
{
    return iterate(spec, n, k).symbols;
}

Rational AffineForm::lambda() const
{
    Rational out(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto e = static_cast<unsigned>(lambda_exponents[i]);
        out *= Rational(boost::multiprecision::pow(numerator(factors[i]), e),
                        boost::multiprecision::pow(denominator(factors[i]), e));
    }
    return out;
}

Rational AffineForm::evaluate(const Rational& n) const
{
    return lambda() * n + rho;
}

AffineForm affine_form(const MappingSpec& spec, const BigInt& n, std::size_t k, std::size_t limit)
{
    if (k > limit) {
        throw ConfigError("affine_form: k = " + std::to_string(k) + " exceeds the exactness limit " +
                          std::to_string(limit));
    }
    AffineForm form;
    form.factors = spec.distinct_factors();
    form.lambda_exponents.assign(form.factors.size(), 0);
    form.rho = 0;

    // Compose x -> (m x - r)/d step by step: rho' = (m rho - r)/d.
    BigInt x = n;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& b = spec.branch(residue(x, spec.modulus()));
        Rational f(BigInt(b.multiplier), BigInt(spec.modulus()));
        auto it = std::find(form.factors.begin(), form.factors.end(), f);
        ++form.lambda_exponents[static_cast<std::size_t>(it - form.factors.begin())];
        form.rho = (Rational(b.multiplier) * form.rho - Rational(b.offset)) / Rational(spec.modulus());
        x = apply(spec, x);
    }
    return form;
}

} // namespace collatz
