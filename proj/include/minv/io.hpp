#ifndef MINV_IO_HPP
#define MINV_IO_HPP

#include <string>

#include "json.hpp"

#include "minv/invariants.hpp"
#include "minv/variety.hpp"

namespace minv {

/// Insertion-ordered JSON keeps serialized output byte-stable.
using Json = nlohmann::ordered_json;

/// Matrix entries are strings parsed per the field descriptor: fractions
/// "a/b" over Q, residues over GF(p), coefficient lists "c0,c1,..." over
/// GF(p^k).  No floats anywhere.
Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const FieldCtx& F, const Json& j);

/// Tuple file: {"field":"F7","n":2,"m":2,"mats":[[["0","1"],["0","0"]],...]}
Json tuple_to_json(const MatTuple& x);
MatTuple tuple_from_json(const Json& j);
MatTuple load_tuple(const std::string& path);

/// Variety file: {"field":...,"n":...,"m":...,"label":...,"points":[mats,...]}
Json variety_to_json(const PointVariety& X);
PointVariety variety_from_json(const Json& j);
PointVariety load_variety(const std::string& path);

/// Map file: {"field":...,"source_m":3,"target_l":5,"images":["X1*X2",...]}
Json mapspec_to_json(const FieldCtx& F, const RegularMapSpec& spec);
RegularMapSpec mapspec_from_json(const Json& j, FieldCtx* out_ctx = nullptr);
RegularMapSpec load_mapspec(const std::string& path, FieldCtx* out_ctx = nullptr);

Json load_json(const std::string& path);

/// Entries of a canonical fingerprint table, one "(s,word) value" line each.
std::vector<std::tuple<std::uint32_t, Word, FieldElem>> fingerprint_entries_from_text(const FieldCtx& F,
                                                                                      const std::string& text);

} // namespace minv

#endif
