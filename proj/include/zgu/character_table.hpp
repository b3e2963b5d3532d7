#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "zgu/cyclotomic.hpp"

namespace zgu {

struct ClassInfo {
    int id = 0;
    std::string name;
    long element_order = 1;
    long size = 1;
    long centralizer_order = 1;
};

struct BrauerBlock {
    std::vector<int> regular_classes;                 // class ids, ascending
    std::vector<std::vector<Cyclotomic>> characters;  // indexed by position in regular_classes
};

/// Character-table-level model of a finite group: conjugacy classes, prime
/// power maps, ordinary characters, optional p-Brauer blocks.  Immutable
/// after construction; all structural invariants are checked by validate(),
/// which from_json always runs.
class CharacterTable {
public:
    static CharacterTable from_json(const nlohmann::json& doc);
    static CharacterTable load_file(const std::string& path);
    /// Direct product of cyclic groups of the given orders.
    static CharacterTable abelian(const std::vector<long>& invariant_factors);

    const std::string& name() const { return name_; }
    long order() const { return order_; }
    long exponent() const { return exponent_; }
    const std::vector<ClassInfo>& classes() const { return classes_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int identity_class() const { return 0; }
    const std::vector<std::vector<Cyclotomic>>& characters() const { return characters_; }
    const std::map<long, BrauerBlock>& brauer() const { return brauer_; }
    bool pap_assumed() const { return pap_assumed_; }
    /// Non-fatal notes produced while loading (e.g. the pap_assumed check).
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// chi_i(1) as a plain integer.
    long degree(int chi) const;

    /// Class of k-th powers of elements of class c; depends on k only mod
    /// the element order. Composite k is routed through the prime power maps.
    int power_class(int c, long long k) const;

    std::vector<int> classes_of_order(long m) const;
    /// Distinct element orders present in the group, ascending.
    std::vector<long> element_orders() const;

    void validate() const;  // throws ValidationError naming the offender

private:
    CharacterTable() = default;
    void check_pap_assumption();

    std::string name_;
    long order_ = 1;
    long exponent_ = 1;
    std::vector<ClassInfo> classes_;
    std::map<long, std::vector<int>> power_maps_;  // prime -> class -> class
    std::vector<std::vector<Cyclotomic>> characters_;
    std::map<long, BrauerBlock> brauer_;
    bool pap_assumed_ = false;
    std::vector<std::string> warnings_;
};

}  // namespace zgu
