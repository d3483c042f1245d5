#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dads/behavior.hpp"
#include "dads/polynomial.hpp"
#include "dads/series.hpp"

namespace dads::io {

using nlohmann::json;

/// System file: {"kind":"system","field":p,"r":..,"k":..,"l":..,
///   "rows":[[ [ {"coef":c,"exp":[..]} ... ] x l ] x k ]}
/// Terms are serialized in graded-lex order; the same schema carries any
/// finite list of polynomial row vectors.
json system_to_json(const PolyMatrix& m);
PolyMatrix system_from_json(const json& j);
std::vector<PolyVector> rows_from_json(const json& j);

/// Series file: {"kind":"series","field":p,"r":..,"l":..,"bound":D,
///   "coeffs":[{"coef":c,"component":i,"exp":[..]} ...]}
/// sorted by (component, graded-lex rank).
json series_to_json(const SeriesVector& w);
SeriesVector series_from_json(const json& j);

/// Slice file: solve output / orth input. Adds "dim", "certificate" and a
/// "basis" array of coefficient lists.
json slice_to_json(const BehaviorSlice& slice, bool certified);

struct SliceData {
    Field field;
    std::size_t r = 0;
    std::size_t l = 0;
    std::int64_t bound = -1;
    std::vector<SeriesVector> basis;
};
SliceData slice_from_json(const json& j);

json scalar_to_json(const Field& field, Fp value);

/// One fixed rendering (2-space indent, sorted keys, trailing newline) so
/// outputs are byte-stable across runs and platforms.
std::string canonical_dump(const json& j);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace dads::io
