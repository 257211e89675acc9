#pragma once

#include <json.hpp>

#include "qbruhat/kgw.hpp"
#include "qbruhat/verify.hpp"

namespace qbruhat {

using nlohmann::json;

// GroupAlgebraElt <-> [{"weight": [ints], "coeff": int}, ...], canonically sorted.
json algebra_to_json(const GroupAlgebraElt& v);
GroupAlgebraElt algebra_from_json(const json& j);

// PathTuple <-> {"start", "end", "segments": [{"vertices", "labels", "kinds"}],
//                "qwt", "length"}; labels are root coordinate arrays.
json tuple_to_json(const Qbg& g, const PathTuple& p);
PathTuple tuple_from_json(const QlsContext& ctx, const json& j);

json graph_to_json(const Qbg& g);

// QLS path, either with exact breakpoints ({"den", "breaks", "dirs"}) or in
// the expanded form repeating each direction den*(a_k - a_{k-1}) times.
json qls_to_json(const QlsPath& eta, bool expanded = false);
QlsPath qls_from_json(const RootSystem& rs, const json& j);

json invariant_to_json(const RootSystem& rs, const InvariantResult& res,
                       const PositivityCertificate* cert);

json sweep_to_json(const SweepStats& s);
SweepStats sweep_from_json(const json& j);
json pair_sweep_to_json(const PairSweepStats& s);
PairSweepStats pair_sweep_from_json(const json& j);

std::vector<int> parse_word(const std::string& text, int rank);

}  // namespace qbruhat
