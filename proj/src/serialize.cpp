#include "contact_census/serialize.hpp"

#include "contact_census/error.hpp"

namespace contact_census {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(ErrorCode::Parse, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::Parse, std::string("expected an integer for ") + what);
  return j.get<std::int64_t>();
}

int as_small_int(const Json& j, const char* what) {
  std::int64_t v = as_int(j, what);
  if (v < -1'000'000 || v > 1'000'000) fail(ErrorCode::Parse, std::string("value out of range for ") + what);
  return static_cast<int>(v);
}

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string("expected an array for ") + what);
  std::vector<std::int64_t> out;
  for (const Json& v : j) out.push_back(as_int(v, what));
  return out;
}

Json side_name(Side s) { return s == Side::Inner ? "inner" : "outer"; }

Side side_from(const Json& j) {
  if (j == "inner") return Side::Inner;
  if (j == "outer") return Side::Outer;
  fail(ErrorCode::Parse, "arc side must be \"inner\" or \"outer\"");
}

}  // namespace

Json document() {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Slope& s) { return s.str(); }

Slope slope_from_json(const Json& j) {
  if (j.is_string()) return Slope::parse(j.get<std::string>());
  if (j.is_number_integer()) return Slope::integer(j.get<std::int64_t>());
  fail(ErrorCode::Parse, "slope must be a string such as \"-10/3\" or an integer");
}

Json to_json(const NegContFrac& cf) { return Json(cf.coeffs()); }

Json to_json(const std::vector<Slope>& path) {
  Json out = Json::array();
  for (const Slope& s : path) out.push_back(to_json(s));
  return out;
}

Json to_json(const MinimalDescriptor& d) {
  Json j = Json::object();
  j["cf"] = to_json(d.cf);
  j["counts"] = d.counts;
  EulerVector e = descriptor_euler(d);
  j["euler"] = {e.x, e.y};
  j["universally_tight"] = is_universally_tight(d);
  return j;
}

MinimalDescriptor minimal_from_json(const Json& j) {
  NegContFrac cf(int_list(field(j, "cf"), "cf"));
  std::vector<std::int64_t> counts = int_list(field(j, "counts"), "counts");
  BlockShape shape = block_shape(cf);
  if (counts.size() != shape.sizes.size())
    fail(ErrorCode::InvalidArgument, "descriptor needs one count per continued fraction block");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0 || counts[i] > shape.sizes[i])
      fail(ErrorCode::InvalidArgument, "count " + std::to_string(counts[i]) + " exceeds block size " +
                                           std::to_string(shape.sizes[i]));
  }
  return MinimalDescriptor{std::move(cf), std::move(counts)};
}

Json to_json(const SliceFactorization& f) {
  Json j = Json::object();
  j["chain"] = to_json(f.chain());
  j["signs"] = f.signs();
  return j;
}

SliceFactorization factorization_from_json(const Json& j) {
  const Json& chain_j = field(j, "chain");
  if (!chain_j.is_array()) fail(ErrorCode::Parse, "chain must be an array of slopes");
  std::vector<Slope> chain;
  for (const Json& s : chain_j) chain.push_back(slope_from_json(s));
  std::vector<int> signs;
  for (std::int64_t s : int_list(field(j, "signs"), "signs")) signs.push_back(static_cast<int>(s));
  return SliceFactorization::from_chain(chain, signs);
}

Json to_json(const LensDescriptor& d) {
  Json j = Json::object();
  j["p"] = d.p;
  j["q"] = d.q;
  j["rotations"] = d.rotations;
  j["counts"] = d.counts;
  j["universally_tight"] = is_universally_tight(d);
  return j;
}

LensDescriptor lens_from_json(const Json& j) {
  LensDescriptor d;
  d.p = as_int(field(j, "p"), "p");
  d.q = as_int(field(j, "q"), "q");
  validate_lens({d.p, d.q});
  d.rotations = int_list(field(j, "rotations"), "rotations");
  d.counts = int_list(field(j, "counts"), "counts");
  auto slots = rotation_slots({d.p, d.q});
  if (d.rotations.size() != slots.size())
    fail(ErrorCode::InvalidArgument, "lens descriptor needs one rotation per continued fraction entry");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (std::find(slots[i].begin(), slots[i].end(), d.rotations[i]) == slots[i].end())
      fail(ErrorCode::InvalidArgument, "rotation " + std::to_string(d.rotations[i]) + " is not allowed in slot " +
                                           std::to_string(i));
  }
  return d;
}

Json to_json(const SolidTorusDescriptor& d) {
  Json j = Json::object();
  j["boundary"] = to_json(d.boundary);
  j["descriptor"] = d.descriptor ? to_json(*d.descriptor) : Json(nullptr);
  j["meridian_rot"] = d.meridian_rot;
  return j;
}

SolidTorusDescriptor solid_torus_from_json(const Json& j) {
  SolidTorusDescriptor d;
  d.boundary = slope_from_json(field(j, "boundary"));
  const Json& desc = field(j, "descriptor");
  if (desc.is_null()) {
    if (d.boundary != Slope(-1, 1))
      fail(ErrorCode::InvalidArgument, "only boundary slope -1 has an empty descriptor");
    return d;
  }
  d.descriptor = minimal_from_json(desc);
  if (descriptor_front(*d.descriptor) != d.boundary)
    fail(ErrorCode::InvalidArgument, "descriptor does not match boundary slope " + d.boundary.str());
  d.meridian_rot = meridian_rotation(*d.descriptor);
  return d;
}

Json to_json(const TwistingData& t) {
  Json j = Json::object();
  j["half_turns"] = t.half_turns;
  j["residual"] = {to_json(t.residual_from), to_json(t.residual_to)};
  return j;
}

Json to_json(const DiskConfig& c) {
  Json j = Json::object();
  j["t"] = c.t;
  Json arcs = Json::array();
  for (auto [a, b] : c.arcs) arcs.push_back({a, b});
  j["arcs"] = std::move(arcs);
  return j;
}

DiskConfig disk_from_json(const Json& j) {
  DiskConfig c;
  c.t = as_small_int(field(j, "t"), "t");
  if (c.t < 1) fail(ErrorCode::InvalidArgument, "disk needs t >= 1");
  const Json& arcs = field(j, "arcs");
  if (!arcs.is_array()) fail(ErrorCode::Parse, "arcs must be an array");
  std::vector<int> used(2 * c.t, 0);
  for (const Json& a : arcs) {
    if (!a.is_array() || a.size() != 2) fail(ErrorCode::Parse, "disk arc must be [i, j]");
    int x = as_small_int(a[0], "arc end"), y = as_small_int(a[1], "arc end");
    if (x > y) std::swap(x, y);
    if (x < 0 || y >= 2 * c.t || x == y || used[x]++ || used[y]++)
      fail(ErrorCode::InvalidArgument, "disk arcs must pair each of the 2t points once");
    c.arcs.emplace_back(x, y);
  }
  if (static_cast<int>(c.arcs.size()) != c.t) fail(ErrorCode::InvalidArgument, "disk needs t arcs");
  std::sort(c.arcs.begin(), c.arcs.end());
  for (auto [a, b] : c.arcs) {
    for (auto [x, y] : c.arcs) {
      if (a < x && x < b && b < y) fail(ErrorCode::InvalidArgument, "disk arcs cross");
    }
  }
  return c;
}

Json to_json(const AnnulusConfig& c) {
  Json j = Json::object();
  j["inner"] = c.inner_markings();
  j["outer"] = c.outer_markings();
  Json arcs = Json::array();
  for (const Arc& a : c.arcs()) {
    arcs.push_back(Json::array({Json::array({side_name(a.a.side), a.a.index}),
                                Json::array({side_name(a.b.side), a.b.index}), a.winding}));
  }
  j["arcs"] = std::move(arcs);
  return j;
}

AnnulusConfig annulus_from_json(const Json& j) {
  int inner = as_small_int(field(j, "inner"), "inner");
  int outer = as_small_int(field(j, "outer"), "outer");
  const Json& arcs_j = field(j, "arcs");
  if (!arcs_j.is_array()) fail(ErrorCode::Parse, "arcs must be an array");
  std::vector<Arc> arcs;
  for (const Json& a : arcs_j) {
    if (!a.is_array() || a.size() != 3 || !a[0].is_array() || a[0].size() != 2 || !a[1].is_array() ||
        a[1].size() != 2)
      fail(ErrorCode::Parse, "annulus arc must be [[side, index], [side, index], winding]");
    arcs.push_back(Arc{{side_from(a[0][0]), as_small_int(a[0][1], "index")},
                       {side_from(a[1][0]), as_small_int(a[1][1], "index")},
                       as_int(a[2], "winding")});
  }
  return AnnulusConfig(inner, outer, std::move(arcs));
}

Json to_json(const ConfigSet& set) {
  Json out = Json::array();
  for (const ConfigClass& cls : set) {
    Json c = Json::object();
    c["representative"] = to_json(cls.representative);
    Json members = Json::array();
    for (const AnnulusConfig& m : cls.members) members.push_back(to_json(m));
    c["members"] = std::move(members);
    out.push_back(std::move(c));
  }
  return out;
}

Json to_json(const GlueOutcome& g) {
  Json j = Json::object();
  j["config"] = to_json(g.config);
  j["trivial_closed"] = g.trivial_closed;
  j["essential_closed"] = g.essential_closed;
  j["identity"] = is_identity_gluing(g);
  return j;
}

}  // namespace contact_census
