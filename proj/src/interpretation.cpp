#include "elp/interpretation.hpp"

#include <algorithm>

namespace elp {

WorldView::WorldView(std::vector<Interpretation> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool WorldView::contains(Interpretation i) const { return std::binary_search(members_.begin(), members_.end(), i); }

bool WorldView::subset_of(const WorldView& o) const {
    return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
}

AtomSet WorldView::support() const {
    AtomSet s;
    for (auto i : members_) {
        s |= i;
    }
    return s;
}

WorldView WorldView::with(Interpretation i) const {
    auto m = members_;
    m.push_back(i);
    return WorldView(std::move(m));
}

WorldView project(const WorldView& wv, AtomSet u) {
    std::vector<Interpretation> out;
    for (auto i : wv) {
        out.push_back(i & u);
    }
    return WorldView(std::move(out));
}

WorldView combine(const WorldView& b, const WorldView& t) {
    std::vector<Interpretation> out;
    for (auto ib : b) {
        for (auto it : t) {
            out.push_back(ib | it);
        }
    }
    return WorldView(std::move(out));
}

std::string format(const WorldView& wv, const AtomTable& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < wv.size(); ++i) {
        out += (i ? ", " : "") + t.format(wv.members()[i]);
    }
    return out + "]";
}

std::string format(const WorldViewSet& wvs, const AtomTable& t) {
    std::string out = "{";
    bool first = true;
    for (const auto& wv : wvs) {
        out += (first ? "" : ", ") + format(wv, t);
        first = false;
    }
    return out + "}";
}

nlohmann::json to_json(const WorldView& wv, const AtomTable& t) {
    auto j = nlohmann::json::array();
    for (auto i : wv) {
        j.push_back(t.names(i));
    }
    return j;
}

nlohmann::json to_json(const WorldViewSet& wvs, const AtomTable& t) {
    auto j = nlohmann::json::array();
    for (const auto& wv : wvs) {
        j.push_back(to_json(wv, t));
    }
    return j;
}

WorldView world_view_from_json(const nlohmann::json& j, const AtomTable& t) {
    std::vector<Interpretation> members;
    for (const auto& interp : j) {
        Interpretation i;
        for (const auto& a : interp) {
            i.insert(t.id(a.get<std::string>()));
        }
        members.push_back(i);
    }
    return WorldView(std::move(members));
}

WorldViewSet world_views_from_json(const nlohmann::json& j, const AtomTable& t) {
    WorldViewSet out;
    for (const auto& wv : j) {
        out.insert(world_view_from_json(wv, t));
    }
    return out;
}

} // namespace elp
