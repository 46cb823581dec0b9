#pragma once

// JSON forms of every value type. Keys are sorted (nlohmann::json uses an
// ordered map), so dumping the same value twice gives identical bytes.

#include "mexcl/kronecker.hpp"
#include "mexcl/monoid.hpp"
#include "mexcl/ordered_group.hpp"
#include "mexcl/rings.hpp"
#include "mexcl/series.hpp"

#include <json.hpp>

#include <string>

namespace mexcl::io {

using Json = nlohmann::json;

/// Reads a JSON document; ParseError carries the byte offset on failure.
Json parse_text(const std::string& text, const std::string& source = "input");
Json read_file(const std::string& path);

Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);
Json int_to_json(const Int& x);

Json group_to_json(const GroupSpec& g);
GroupPtr group_from_json(const Json& j);

Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j, const GroupPtr& group);

Json window_to_json(const Window& w);
Window window_from_json(const Json& j, const GroupPtr& group);
/// "lo:hi,lo:hi/qlo:qhi,lo:hi@den" with one entry per component; a single
/// entry is repeated over every component.
Window parse_window(const std::string& text, const GroupPtr& group);

Json monoid_to_json(const MonoidExpr& s);
MonoidExpr monoid_from_json(const Json& j, const GroupPtr& group);

Json series_to_json(const Series& f);
Series series_from_json(const Json& j, const GroupPtr& group, const Field& default_field = Field::Q());

Json ring_to_json(const RingDesc& r);
RingPtr ring_from_json(const Json& j, const GroupPtr& group);

Json tpoly_to_json(const TPoly& f);
Json ratfunc_to_json(const RatFunc& phi);
RatFunc ratfunc_from_json(const Json& j, const GroupPtr& group, const Field& field = Field::Q());

Json valuation_to_json(const MonomialValuation& v);
MonomialValuation valuation_from_json(const Json& j, const GroupPtr& group);

/// 64-bit FNV-1a of a string, as 16 hex digits.
std::string digest(const std::string& text);

}  // namespace mexcl::io
