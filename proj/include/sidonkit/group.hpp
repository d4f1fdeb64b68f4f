#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sidonkit/permutation.hpp"

namespace sidonkit {

using Element = std::uint32_t;

// A configured work, order or output limit was hit. Raising the limit may help.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOrderCap = 20160;

// Element law behind a FiniteGroup. Index 0 is always the identity.
class GroupImpl {
public:
    virtual ~GroupImpl() = default;
    virtual std::uint64_t order() const = 0;
    virtual Element mul(Element a, Element b) const = 0;
    virtual Element inv(Element a) const = 0;
    virtual std::string render(Element a) const = 0;
    // Returns nullopt when the text is not an element literal of this group.
    virtual std::optional<Element> parse(std::string_view text) const = 0;
    virtual bool is_permutation_group() const { return false; }
    virtual std::size_t degree() const { return 0; }
    virtual Permutation to_permutation(Element) const;
    virtual std::optional<Element> from_permutation(const Permutation&) const;
};

class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::shared_ptr<const GroupImpl> impl, std::string label);

    std::uint64_t order() const { return order_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(order_); }
    Element identity() const { return 0; }
    const std::string& label() const { return label_; }

    // Unchecked fast path used by the searches.
    Element mul(Element a, Element b) const
    {
        return table_.empty() ? impl_->mul(a, b) : table_[static_cast<std::size_t>(a) * order_ + b];
    }
    Element inv(Element a) const { return inverses_[a]; }

    // Range-checked versions.
    Element multiply(Element a, Element b) const;
    Element inverse(Element a) const;

    std::string render(Element a) const;
    // Accepts the group's native literal or "#<index>".
    Element parse_element(std::string_view text) const;

    bool is_permutation_group() const { return impl_->is_permutation_group(); }
    std::size_t degree() const { return impl_->degree(); }
    Permutation to_permutation(Element a) const { return impl_->to_permutation(a); }
    std::optional<Element> from_permutation(const Permutation& p) const { return impl_->from_permutation(p); }

    bool has_table() const { return !table_.empty(); }
    const GroupImpl& impl() const { return *impl_; }
    bool same_as(const FiniteGroup& other) const { return impl_ == other.impl_; }

private:
    std::shared_ptr<const GroupImpl> impl_;
    std::string label_;
    std::uint64_t order_ = 0;
    std::vector<Element> table_;
    std::vector<Element> inverses_;
};

// Sorted, duplicate-free subset of a group.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(FiniteGroup group, std::vector<Element> members);

    const FiniteGroup& group() const { return group_; }
    const std::vector<Element>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Element a) const;

    friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.members_ == b.members_; }

private:
    FiniteGroup group_;
    std::vector<Element> members_;
};

// Multiplication table in the on-disk layout: row a, column b holds a*b.
struct GroupTable {
    std::uint32_t order = 0;
    std::vector<Element> entries;
};

// Spec grammar: S:<n> | A:<n> | Z:<n> | prod(<spec>,<spec>) | table:<path> | os:<p>,<k>
FiniteGroup build_group(std::string_view spec, std::uint64_t order_cap = kDefaultOrderCap);
FiniteGroup group_from_table(GroupTable table, std::string label);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

GroupTable read_group_table(const std::string& path);
void write_group_table(const FiniteGroup& g, const std::string& path);
GroupTable full_table(const FiniteGroup& g);

Element group_multiply(const FiniteGroup& g, Element a, Element b);
Element group_inverse(const FiniteGroup& g, Element a);
std::uint64_t element_order(const FiniteGroup& g, Element a);
std::uint64_t count_involutions(const FiniteGroup& g);
ElementSet conjugacy_class(const FiniteGroup& g, Element a);
std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

// All (even, when alternating) permutations of {1..n} fixing point, as a subset of S:n or A:n.
ElementSet point_stabilizer_subset(std::uint32_t n, bool alternating, std::uint32_t point);

struct OsParameters {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
};
std::optional<OsParameters> find_os_parameters(std::uint64_t n, std::uint32_t k);
bool is_prime(std::uint64_t n);

ElementSet generated_subgroup(const FiniteGroup& g, const std::vector<Element>& generators);
bool is_subgroup(const ElementSet& s);
bool is_normal(const ElementSet& s);

struct AxiomReport {
    bool associative = true;
    bool identity = true;
    bool inverses = true;
    bool exhaustive = true;
    bool ok() const { return associative && identity && inverses; }
};
// Exhaustive below the threshold order, otherwise checks `samples` random triples.
AxiomReport check_group_axioms(const FiniteGroup& g, std::uint64_t exhaustive_up_to = 256,
                               std::uint64_t samples = 200000, std::uint64_t seed = 1);

// Split a comma-separated list of element literals, ignoring commas nested in
// (), [] or <>.
std::vector<std::string> split_element_list(std::string_view text);
ElementSet parse_element_set(const FiniteGroup& g, std::string_view text);

} // namespace sidonkit
