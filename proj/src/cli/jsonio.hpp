#ifndef WITTKIT_CLI_JSONIO_HPP
#define WITTKIT_CLI_JSONIO_HPP

#include <json.hpp>

#include <wittkit/cycles.hpp>
#include <wittkit/forms.hpp>
#include <wittkit/ptypical.hpp>
#include <wittkit/ring.hpp>
#include <wittkit/witt.hpp>

namespace wittkit::cli
{

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, everything else a string.
json to_json(const Int &v);
json to_json(const Elem &a);
json to_json(const std::vector<Elem> &v);
json to_json(const WittVector &w);
json to_json(const DiffForm &w);
json to_json(const ZeroCycle &z);
json to_json(const P1Point &P, const std::string &param);

// Components from a JSON array (numbers or expression strings).
std::vector<Elem> elems_from_json(const Ring &r, const json &arr);
std::vector<Elem> elems_from_text(const Ring &r, const std::string &text);

// Curve: {"n", "x", "y": [...], "modulus", "field", optional "param"}.
ParamCurve curve_from_json(const json &j, const std::string &field_override);
// Cycle: {"field", "points": [{"mult", "coords": [...], optional
// "minpoly" and "generator"}]}, or {"curve": {...}} for its boundary.
ZeroCycle cycle_from_json(const json &j, const std::string &field_override);

// File contents, or the argument itself when it already is JSON text.
json load_json_arg(const std::string &arg);

} // namespace wittkit::cli

#endif
