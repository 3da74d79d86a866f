#pragma once

#include "elp/interpretation.hpp"
#include "elp/limits.hpp"
#include "elp/program.hpp"
#include "elp/semantics.hpp"

namespace elp::detail {

/// Replacement for one subjective literal given the truth of its core.
ObjectiveLiteral reduct_literal(const SubjectiveLiteral& l, bool core_value, Semantics s);
WorldViewSet s17_select(const Program& p, const WorldViewSet& k15);
WorldViewSet founded_only(const Program& p, const WorldViewSet& g91, const Limits& limits);

} // namespace elp::detail
