#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zgu/character_table.hpp"
#include "zgu/cyclotomic.hpp"

namespace zgu {

/// Candidate array X = (X_{d,C}) for a hypothetical torsion unit of order n:
/// one integer row per divisor d of n, indexed by class id.  Row d models the
/// partial augmentations of u^d.
struct VirtualUnit {
    long order = 1;
    std::map<long, std::vector<long long>> rows;  // divisor -> per-class entries
};

/// First-row-only candidate (Y_C) for the PAP-adapted method.
struct PAPVector {
    long order = 1;
    std::vector<long long> values;  // per-class
};

/// Reference to an ordinary or p-Brauer irreducible character.
struct CharRef {
    enum class Kind { Ordinary, Brauer };
    Kind kind = Kind::Ordinary;
    long prime = 0;  // Brauer only
    int index = 0;

    static CharRef ordinary(int i) { return {Kind::Ordinary, 0, i}; }
    static CharRef brauer(long p, int i) { return {Kind::Brauer, p, i}; }
    std::string label() const;
};

/// All characters used for order n: Irr(G) plus every requested p-Brauer
/// block with p not dividing n.  Empty request list = every applicable block.
std::vector<CharRef> irr_n(const CharacterTable& table, long n,
                           const std::optional<std::vector<long>>& brauer_primes);

/// chi(C) with Brauer characters extended by zero off the p-regular classes.
const Cyclotomic& char_value(const CharacterTable& table, CharRef chi, int classId);
long char_degree(const CharacterTable& table, CharRef chi);

/// May X_{d,C} be nonzero? (Berman-Higman plus the order-divisibility
/// reduction; the d = n row is pinned to the identity indicator.)
bool entry_may_be_nonzero(const CharacterTable& table, long n, long d, int classId);

/// Structural check of the VirtualUnit invariants; throws PreconditionError.
void validate_virtual_unit(const CharacterTable& table, const VirtualUnit& X);
void validate_pap_vector(const CharacterTable& table, const PAPVector& Y);

/// Eigenvalue-multiplicity form mu(chi, X, xi); xi must satisfy xi^n = 1.
Rat mu_virtual(const CharacterTable& table, CharRef chi, const VirtualUnit& X,
               const Cyclotomic& xi);

/// mu(chi, C, xi) for a group element of class c, computed at working order n
/// (element_order(c) must divide n).
Rat mu_class(const CharacterTable& table, CharRef chi, int classId, long n,
             const Cyclotomic& xi);

/// X(g): the candidate realized by a group element of class g (order n).
VirtualUnit trivial_candidate(const CharacterTable& table, int classId);

struct PapViolation {
    long divisor;
    int classId;
    long long pushed_sum;  // sum over D with D^d = C of X_{1,D}
    long long entry;       // X_{d,C}
};

/// Does X satisfy X_{d,C} = sum_{D^d=C} X_{1,D} for every divisor d?
/// Divisor checking suffices for the full power property.
std::pair<bool, std::vector<PapViolation>> pap_check(const CharacterTable& table,
                                                     const VirtualUnit& X);

/// The unique PAP-coherent expansion X(Y).
VirtualUnit pap_expand(const CharacterTable& table, const PAPVector& Y);

/// sum_C Y_C mu(chi, C, xi); equals mu_virtual(chi, pap_expand(Y), xi).
Rat mu_of_expansion(const CharacterTable& table, CharRef chi, const PAPVector& Y,
                    const Cyclotomic& xi);

// --- compiled constraint system -------------------------------------------

struct CompileOptions {
    /// Brauer primes to use; nullopt = all blocks with p not dividing n.
    /// An explicit empty list disables Brauer characters.
    std::optional<std::vector<long>> brauer_primes;
    bool use_cl_congruences = true;        // prime-power coefficient congruences
    bool use_folklore_congruences = true;  // cross-row power congruences
};

struct VarKey {
    long divisor;
    int classId;
    auto operator<=>(const VarKey&) const = default;
};

struct LinearRow {
    enum class Kind { Geq0, CongMod };
    Kind kind = Kind::Geq0;
    long modulus = 0;  // CongMod only
    long long constant = 0;
    std::vector<long long> coeffs;  // indexed like ConstraintSystem::vars
    std::string provenance;
};

/// Exact integer encoding of the order-n HeLP constraints: rows n*mu >= 0 and
/// n*mu = 0 mod n over the live entries X_{d,C}, plus the optional congruence
/// families.  The d = n identity row is folded into the constants.
struct ConstraintSystem {
    const CharacterTable* table = nullptr;
    long n = 1;
    std::vector<CharRef> characters;
    std::vector<VarKey> vars;  // divisors ascending, class ids ascending
    std::map<VarKey, int> var_index;
    std::vector<LinearRow> rows;
    std::vector<long long> box;  // |X_var| <= box[i] (= class size)

    int index_of(long d, int c) const { return var_index.at({d, c}); }
};

ConstraintSystem compile_constraints(const CharacterTable& table, long n,
                                     const CompileOptions& options = {});

/// Exact re-evaluation of one compiled row at a full candidate.
bool row_satisfied(const ConstraintSystem& sys, const LinearRow& row,
                   const VirtualUnit& X);

}  // namespace zgu
