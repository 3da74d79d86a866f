#pragma once

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "elp/atom.hpp"

namespace elp {

/// A non-empty set of interpretations, kept sorted and duplicate free.
class WorldView {
public:
    WorldView() = default;
    explicit WorldView(std::vector<Interpretation> members);
    WorldView(std::initializer_list<Interpretation> members) : WorldView(std::vector<Interpretation>(members)) {}

    const std::vector<Interpretation>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Interpretation i) const;
    bool subset_of(const WorldView& o) const;
    bool proper_subset_of(const WorldView& o) const { return size() < o.size() && subset_of(o); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    /// Union of all members.
    AtomSet support() const;
    WorldView with(Interpretation i) const;

    friend bool operator==(const WorldView&, const WorldView&) = default;
    friend auto operator<=>(const WorldView& a, const WorldView& b) { return a.members_ <=> b.members_; }

private:
    std::vector<Interpretation> members_;
};

using WorldViewSet = std::set<WorldView>;

/// { I ∩ U : I ∈ wv }.
WorldView project(const WorldView& wv, AtomSet u);
/// { I_b ∪ I_t : I_b ∈ b, I_t ∈ t }.
WorldView combine(const WorldView& b, const WorldView& t);

std::string format(const WorldView& wv, const AtomTable& t);
std::string format(const WorldViewSet& wvs, const AtomTable& t);
nlohmann::json to_json(const WorldView& wv, const AtomTable& t);
nlohmann::json to_json(const WorldViewSet& wvs, const AtomTable& t);
WorldView world_view_from_json(const nlohmann::json& j, const AtomTable& t);
WorldViewSet world_views_from_json(const nlohmann::json& j, const AtomTable& t);

} // namespace elp
