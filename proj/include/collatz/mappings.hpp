#ifndef COLLATZ_MAPPINGS_HPP
#define COLLATZ_MAPPINGS_HPP

// Generalized 3x+1 mappings T(x) = (m_i x - r_i) / d for x = i (mod d),
// their exact iteration, residue symbol sequences and affine forms.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "collatz/numeric.hpp"

namespace collatz {

struct BranchRule {
    int residue = 0;
    std::int64_t multiplier = 1;
    std::int64_t offset = 0;

    friend bool operator==(const BranchRule&, const BranchRule&) = default;
};

/// Which of the two per-step factors a branch applies. `below` is the
/// contracting factor m/d < 1 (the "divisible" steps, counted by k2),
/// `above` the expanding one (counted by k1).
enum class BranchKind { below, above };

class MappingSpec {
public:
    /// Validates modulus, residue coverage and r_i = i m_i (mod d).
    MappingSpec(std::string name, int modulus, std::vector<BranchRule> branches, bool bijective = false);

    static MappingSpec original_collatz();
    static MappingSpec three_x_plus_one();
    static MappingSpec carnielli_t(int d);
    static MappingSpec carnielli_l(int d);

    /// {"d": int, "branches": [{"residue", "multiplier", "offset"}], optional "name", "bijective"}.
    static MappingSpec from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;

    const std::string& name() const { return name_; }
    int modulus() const { return modulus_; }
    bool bijective() const { return bijective_; }
    std::span<const BranchRule> branches() const { return branches_; }
    const BranchRule& branch(int residue) const { return branches_.at(static_cast<std::size_t>(residue)); }

    /// Distinct per-step factors m_i/d, largest first.
    std::vector<Rational> distinct_factors() const;
    /// True when exactly two distinct factors straddle 1, which is what the
    /// (k1, k2) bookkeeping and the condition C need.
    bool is_two_factor() const;
    /// Throws ConfigError unless is_two_factor().
    void require_two_factor() const;
    BranchKind kind(int residue) const;
    Rational below_factor() const;
    Rational above_factor() const;
    /// Number of residues using the above / below factor.
    int above_branch_count() const;
    int below_branch_count() const;

    /// 7/24 for the original permutation, 5/12 for 3x+1; none otherwise.
    std::optional<Rational> default_constant() const;

private:
    std::string name_;
    int modulus_;
    std::vector<BranchRule> branches_;
    bool bijective_;
};

/// Looks up a preset: "collatz", "3x1", "carnielli-t<d>", "carnielli-l<d>".
MappingSpec mapping_preset(const std::string& name);

BigInt apply(const MappingSpec& spec, const BigInt& n);
/// Fixed-width step; nullopt when the result leaves the int64 range.
std::optional<std::int64_t> apply_checked(const MappingSpec& spec, std::int64_t n);

/// Residue symbols of a trajectory. Canonical residues are stored; d = 3
/// displays through the t-alphabet (0 -> 0, 1 -> -1, 2 -> +1).
class SymbolSequence {
public:
    SymbolSequence() = default;
    SymbolSequence(int modulus, std::vector<int> residues);

    int modulus() const { return modulus_; }
    std::size_t size() const { return residues_.size(); }
    const std::vector<int>& residues() const { return residues_; }
    std::vector<int> entries() const;

    static int to_display(int residue, int modulus);
    static int from_display(int symbol, int modulus);

    friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;

private:
    int modulus_ = 0;
    std::vector<int> residues_;
};

struct Trajectory {
    BigInt start;
    std::vector<BigInt> values; // k + 1 entries
    SymbolSequence symbols;     // k entries
};

Trajectory iterate(const MappingSpec& spec, const BigInt& n, std::size_t k);
SymbolSequence symbol_sequence(const MappingSpec& spec, const BigInt& n, std::size_t k);

/// g^(k)(n) = lambda * n + rho, lambda being the product of the factors
/// taken. Exponents are indexed like MappingSpec::distinct_factors(), so a
/// two-factor map yields (k1, k2).
struct AffineForm {
    std::vector<Rational> factors;
    std::vector<std::int64_t> lambda_exponents;
    Rational rho;

    Rational lambda() const;
    Rational evaluate(const Rational& n) const;
};

inline constexpr std::size_t kDefaultAffineLimit = 64;

AffineForm affine_form(const MappingSpec& spec, const BigInt& n, std::size_t k,
                       std::size_t limit = kDefaultAffineLimit);

} // namespace collatz

#endif // COLLATZ_MAPPINGS_HPP
