#include "contact_census/contact_census.h"

#include <functional>
#include <map>
#include <string>

#include "contact_census/contfrac.hpp"
#include "contact_census/diagram.hpp"
#include "contact_census/divsets.hpp"
#include "contact_census/error.hpp"
#include "contact_census/farey.hpp"
#include "contact_census/lens.hpp"
#include "contact_census/serialize.hpp"
#include "contact_census/slices.hpp"

struct cc_document {
  std::string text;
};

struct cc_config {
  contact_census::AnnulusConfig value;
};

namespace {

using namespace contact_census;

constexpr int kDefaultWindow = 8;

thread_local std::string g_last_error;

cc_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CC_INVALID_ARGUMENT;
    case ErrorCode::Domain: return CC_DOMAIN;
    case ErrorCode::Overflow: return CC_OVERFLOW;
    case ErrorCode::WindowTooSmall: return CC_WINDOW_TOO_SMALL;
    case ErrorCode::Parse: return CC_PARSE;
    case ErrorCode::Internal: return CC_INTERNAL;
  }
  return CC_INTERNAL;
}

template <typename F>
cc_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return CC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CC_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CC_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CC_INTERNAL;
  }
}

template <typename T>
void require(T* p, const char* name) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(name) + " must not be null");
}

Slope from_c(cc_slope s) { return Slope(s.p, s.q); }
cc_slope to_c(const Slope& s) { return {s.p(), s.q()}; }

// Request accessors.
const Json& arg(const Json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end()) fail(ErrorCode::InvalidArgument, std::string("missing argument '") + key + "'");
  return *it;
}

std::int64_t int_arg(const Json& req, const char* key) {
  const Json& v = arg(req, key);
  if (!v.is_number_integer()) fail(ErrorCode::InvalidArgument, std::string("argument '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t int_arg(const Json& req, const char* key, std::int64_t fallback) {
  return req.contains(key) ? int_arg(req, key) : fallback;
}

int small_arg(const Json& req, const char* key, std::int64_t fallback) {
  std::int64_t v = int_arg(req, key, fallback);
  if (v < -100000 || v > 100000) fail(ErrorCode::InvalidArgument, std::string("argument '") + key + "' is out of range");
  return static_cast<int>(v);
}

int small_arg(const Json& req, const char* key) {
  if (!req.contains(key)) fail(ErrorCode::InvalidArgument, std::string("missing argument '") + key + "'");
  return small_arg(req, key, 0);
}

Slope slope_arg(const Json& req, const char* key) { return slope_from_json(arg(req, key)); }

ArcOrientation orientation_arg(const Json& req) {
  if (!req.contains("orientation")) return ArcOrientation::Counterclockwise;
  const Json& v = req["orientation"];
  if (v == "counterclockwise") return ArcOrientation::Counterclockwise;
  if (v == "clockwise") return ArcOrientation::Clockwise;
  fail(ErrorCode::InvalidArgument, "orientation must be \"counterclockwise\" or \"clockwise\"");
}

const char* orientation_name(ArcOrientation o) {
  return o == ArcOrientation::Clockwise ? "clockwise" : "counterclockwise";
}

void require_window(int window) {
  if (window < 1) fail(ErrorCode::WindowTooSmall, "window must be at least 1");
}

Json euler_json(const EulerVector& e) { return Json::array({e.x, e.y}); }

// Euler data for anything a descriptor-producing command emits.
Json describe_euler(const Json& item) {
  if (!item.is_object()) fail(ErrorCode::Parse, "expected a descriptor object");
  Json out = Json::object();
  if (item.contains("rotations")) {
    LensDescriptor d = lens_from_json(item);
    auto [pd, qd] = dual_slope(d.p, d.q);
    out["p"] = d.p;
    out["q"] = d.q;
    out["rotations"] = d.rotations;
    if (pd == 1 && qd == 1) {
      out["euler"] = nullptr;
    } else {
      MinimalDescriptor m{to_cf(pd, qd), d.counts};
      Json mj = to_json(minimal_from_json(to_json(m)));
      out["euler"] = mj["euler"];
    }
    out["universally_tight"] = is_universally_tight(d);
    return out;
  }
  if (item.contains("boundary")) {
    SolidTorusDescriptor d = solid_torus_from_json(item);
    out["boundary"] = to_json(d.boundary);
    out["euler"] = d.descriptor ? euler_json(descriptor_euler(*d.descriptor)) : Json(nullptr);
    out["meridian_rot"] = d.meridian_rot;
    return out;
  }
  if (item.contains("chain")) {
    SliceFactorization f = factorization_from_json(item);
    out["euler"] = euler_json(euler_class(f));
    return out;
  }
  MinimalDescriptor d = minimal_from_json(item);
  out["cf"] = to_json(d.cf);
  out["counts"] = d.counts;
  out["euler"] = euler_json(descriptor_euler(d));
  out["universally_tight"] = is_universally_tight(d);
  return out;
}

Json op_cf(const Json& req) {
  std::int64_t p = int_arg(req, "p"), q = int_arg(req, "q");
  NegContFrac cf = to_cf(p, q);
  Json doc = document();
  doc["p"] = p;
  doc["q"] = q;
  doc["coeffs"] = to_json(cf);
  doc["path"] = to_json(path_via_cf(p, q));
  doc["blocks"] = block_shape(cf).sizes;
  return doc;
}

Json op_farey_path(const Json& req) {
  Json doc = document();
  doc["path"] = to_json(shortest_path(slope_arg(req, "from"), slope_arg(req, "to")));
  return doc;
}

Json op_farey_adjacent(const Json& req) {
  Json doc = document();
  doc["adjacent"] = farey_adjacent(slope_arg(req, "a"), slope_arg(req, "b"));
  return doc;
}

Json op_farey_bypass(const Json& req) {
  ArcOrientation o = orientation_arg(req);
  Json doc = document();
  doc["slope"] = to_json(bypass_slope(slope_arg(req, "s"), slope_arg(req, "r"), o));
  doc["orientation"] = orientation_name(o);
  return doc;
}

Json op_t2i_count(const Json& req) {
  T2ICount c = count_t2i(int_arg(req, "p"), int_arg(req, "q"), int_arg(req, "n", 0));
  Json doc = document();
  doc["count"] = c.count;
  doc["modulo_holonomy"] = c.modulo_holonomy;
  return doc;
}

Json op_t2i_enumerate(const Json& req) {
  std::int64_t p = int_arg(req, "p"), q = int_arg(req, "q"), n = int_arg(req, "n", 0);
  Json doc = document();
  doc["p"] = p;
  doc["q"] = q;
  doc["n"] = n;
  if (n == 0 && p == 1 && q == 1) {
    int window = small_arg(req, "window", kDefaultWindow);
    require_window(window);
    ConfigSet set = enumerate_nonrotative(1, 1, window);
    doc["kind"] = "nonrotative";
    doc["window"] = window;
    doc["count"] = set.size();
    doc["classes"] = to_json(set);
    return doc;
  }
  if (n == 0) {
    std::vector<MinimalDescriptor> all = enumerate_minimal(p, q);
    doc["kind"] = "minimal";
    doc["count"] = all.size();
    Json list = Json::array();
    for (const MinimalDescriptor& d : all) list.push_back(to_json(d));
    doc["descriptors"] = std::move(list);
    return doc;
  }
  doc["kind"] = "nonminimal";
  Json list = Json::array();
  for (int sign : {1, -1}) {
    NonMinimalDecomposition dec = decompose_nonminimal(p, q, n, sign);
    Json item = Json::object();
    item["n"] = n;
    item["sign"] = sign;
    item["outer"] = dec.outer ? to_json(*dec.outer) : Json(nullptr);
    Json f = to_json(dec.combined());
    item["chain"] = f["chain"];
    item["signs"] = f["signs"];
    list.push_back(std::move(item));
  }
  doc["count"] = list.size();
  doc["descriptors"] = std::move(list);
  return doc;
}

Json op_t2i_euler(const Json& req) {
  Json doc = document();
  if (req.contains("descriptors")) {
    Json list = Json::array();
    for (const Json& item : arg(req, "descriptors")) list.push_back(describe_euler(item));
    doc["count"] = list.size();
    doc["results"] = std::move(list);
    return doc;
  }
  Json single = describe_euler(req);
  for (auto& [k, v] : single.items()) doc[k] = v;
  if (req.contains("chain")) doc["normal_form"] = to_json(shuffle_normal_form(factorization_from_json(req)));
  return doc;
}

Json op_t2i_glue_check(const Json& req) {
  GlueResult r = glue_check(factorization_from_json(req));
  Json doc = document();
  if (std::holds_alternative<GlueOvertwisted>(r)) {
    doc["result"] = "overtwisted";
    return doc;
  }
  const GlueTight& t = std::get<GlueTight>(r);
  doc["result"] = "tight";
  doc["descriptor"] = to_json(t.descriptor);
  doc["reduced"] = to_json(t.reduced);
  return doc;
}

Json op_t2i_twisting(const Json& req) {
  const Json& chain_j = arg(req, "chain");
  if (!chain_j.is_array()) fail(ErrorCode::InvalidArgument, "chain must be an array of slopes");
  std::vector<Slope> chain;
  for (const Json& s : chain_j) chain.push_back(slope_from_json(s));
  Json doc = document();
  const Json body = to_json(twisting(chain));
  for (auto& [k, v] : body.items()) doc[k] = v;
  return doc;
}

Json op_lens_count(const Json& req) {
  Json doc = document();
  doc["count"] = count_lens({int_arg(req, "p"), int_arg(req, "q")});
  return doc;
}

Json op_lens_enumerate(const Json& req) {
  LensSpace l{int_arg(req, "p"), int_arg(req, "q")};
  std::vector<LensDescriptor> all = enumerate_lens(l);
  auto [pd, qd] = dual_slope(l.p, l.q);
  Json doc = document();
  doc["p"] = l.p;
  doc["q"] = l.q;
  doc["dual"] = to_json(Slope(-pd, qd));
  doc["count"] = all.size();
  Json list = Json::array();
  for (const LensDescriptor& d : all) list.push_back(to_json(d));
  doc["descriptors"] = std::move(list);
  return doc;
}

Json op_lens_ut_count(const Json& req) {
  Json doc = document();
  doc["count"] = universally_tight_count_lens({int_arg(req, "p"), int_arg(req, "q")});
  return doc;
}

Json op_solid_count(const Json& req) {
  std::int64_t p = int_arg(req, "p"), q = int_arg(req, "q");
  Json doc = document();
  doc["boundary"] = to_json(Slope(-p, q));
  doc["count"] = count_solid_torus(p, q);
  return doc;
}

Json op_solid_enumerate(const Json& req) {
  std::int64_t p = int_arg(req, "p"), q = int_arg(req, "q");
  std::vector<SolidTorusDescriptor> all = enumerate_solid_torus(p, q);
  Json doc = document();
  doc["boundary"] = to_json(Slope(-p, q));
  doc["count"] = all.size();
  Json list = Json::array();
  for (const SolidTorusDescriptor& d : all) list.push_back(to_json(d));
  doc["descriptors"] = std::move(list);
  return doc;
}

AnnulusConfig config_arg(const Json& req, const char* key) {
  const Json& v = arg(req, key);
  return annulus_from_json(v.is_string() ? parse_json(v.get<std::string>()) : v);
}

Json op_divsets_enumerate(const Json& req) {
  int n0 = small_arg(req, "n0"), n1 = small_arg(req, "n1");
  int window = small_arg(req, "window", kDefaultWindow);
  require_window(window);
  ConfigSet set = enumerate_nonrotative(n0, n1, window);
  Json doc = document();
  doc["n0"] = n0;
  doc["n1"] = n1;
  doc["window"] = window;
  doc["count"] = set.size();
  doc["classes"] = to_json(set);
  return doc;
}

Json op_divsets_dual(const Json& req) {
  AnnulusConfig c = config_arg(req, "config");
  int far = small_arg(req, "far", c.inner_markings());
  int window = small_arg(req, "window", kDefaultWindow);
  require_window(window);
  ConfigSet set = dual_set(c, far, window);
  Json doc = document();
  doc["far"] = far;
  doc["window"] = window;
  doc["count"] = set.size();
  doc["classes"] = to_json(set);
  return doc;
}

Json op_divsets_reflexive(const Json& req) {
  AnnulusConfig c = config_arg(req, "config");
  int window = small_arg(req, "window", kDefaultWindow);
  require_window(window);
  Json doc = document();
  doc["window"] = window;
  doc["reflexive"] = reflexive_check(c, window);
  return doc;
}

Json op_divsets_disk_equiv(const Json& req) {
  Json doc = document();
  doc["equivalent"] = disk_equivalent(config_arg(req, "a"), config_arg(req, "b"));
  return doc;
}

Json op_divsets_bypass(const Json& req) {
  TorusDividingSet ds{int_arg(req, "n"), slope_arg(req, "slope")};
  TorusDividingSet next = attach_bypass(ds, slope_arg(req, "r"), orientation_arg(req));
  Json doc = document();
  doc["n"] = next.n;
  doc["slope"] = to_json(next.slope);
  return doc;
}

Json op_divsets_disk(const Json& req) {
  int t = small_arg(req, "t");
  std::vector<DiskConfig> all = enumerate_disk(t);
  Json doc = document();
  doc["t"] = t;
  doc["count"] = all.size();
  Json list = Json::array();
  for (const DiskConfig& c : all) list.push_back(to_json(c));
  doc["configs"] = std::move(list);
  return doc;
}

Json op_divsets_glue(const Json& req) {
  GlueOutcome g = glue(config_arg(req, "lower"), config_arg(req, "upper"));
  Json doc = document();
  const Json body = to_json(g);
  for (auto& [k, v] : body.items()) doc[k] = v;
  return doc;
}

using Handler = std::function<Json(const Json&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"cf", op_cf},
      {"farey.path", op_farey_path},
      {"farey.adjacent", op_farey_adjacent},
      {"farey.bypass", op_farey_bypass},
      {"t2i.count", op_t2i_count},
      {"t2i.enumerate", op_t2i_enumerate},
      {"t2i.euler", op_t2i_euler},
      {"t2i.glue-check", op_t2i_glue_check},
      {"t2i.twisting", op_t2i_twisting},
      {"lens.count", op_lens_count},
      {"lens.enumerate", op_lens_enumerate},
      {"lens.ut-count", op_lens_ut_count},
      {"solidtorus.count", op_solid_count},
      {"solidtorus.enumerate", op_solid_enumerate},
      {"divsets.enumerate", op_divsets_enumerate},
      {"divsets.dual", op_divsets_dual},
      {"divsets.reflexive", op_divsets_reflexive},
      {"divsets.disk-equiv", op_divsets_disk_equiv},
      {"divsets.bypass", op_divsets_bypass},
      {"divsets.disk", op_divsets_disk},
      {"divsets.glue", op_divsets_glue},
  };
  return table;
}

std::string run_diagram(const Json& req) {
  std::string kind = arg(req, "kind").get<std::string>();
  std::string format = req.value("format", std::string("svg"));
  DiagramFormat f;
  if (format == "svg") f = DiagramFormat::Svg;
  else if (format == "dot") f = DiagramFormat::Dot;
  else fail(ErrorCode::InvalidArgument, "format must be svg or dot");
  std::string payload;
  if (req.contains("payload")) {
    const Json& p = req["payload"];
    payload = p.is_string() ? p.get<std::string>() : p.dump();
  }
  return emit_diagram(kind, payload, f);
}

cc_document* make_document(std::string text) { return new cc_document{std::move(text)}; }

}  // namespace

extern "C" {

const char* cc_version(void) { return "1.0.0"; }

const char* cc_status_name(cc_status status) {
  switch (status) {
    case CC_OK: return "ok";
    case CC_INVALID_ARGUMENT: return "invalid argument";
    case CC_DOMAIN: return "domain error";
    case CC_OVERFLOW: return "overflow";
    case CC_WINDOW_TOO_SMALL: return "window too small";
    case CC_PARSE: return "parse error";
    case CC_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cc_last_error(void) { return g_last_error.c_str(); }

const char* cc_document_text(const cc_document* doc) { return doc ? doc->text.c_str() : ""; }
size_t cc_document_size(const cc_document* doc) { return doc ? doc->text.size() : 0; }
void cc_document_free(cc_document* doc) { delete doc; }

cc_status cc_slope_parse(const char* text, cc_slope* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = to_c(Slope::parse(text));
  });
}

cc_status cc_farey_adjacent(cc_slope a, cc_slope b, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = farey_adjacent(from_c(a), from_c(b)) ? 1 : 0;
  });
}

cc_status cc_bypass_slope(cc_slope s, cc_slope r, cc_orientation orientation, cc_slope* out) {
  return guarded([&] {
    require(out, "out");
    ArcOrientation o = orientation == CC_CLOCKWISE ? ArcOrientation::Clockwise : ArcOrientation::Counterclockwise;
    *out = to_c(bypass_slope(from_c(s), from_c(r), o));
  });
}

cc_status cc_dual_slope(int64_t p, int64_t q, int64_t* p_dual, int64_t* q_dual) {
  return guarded([&] {
    require(p_dual, "p_dual");
    require(q_dual, "q_dual");
    auto [pd, qd] = dual_slope(p, q);
    *p_dual = pd;
    *q_dual = qd;
  });
}

cc_status cc_count_lens(int64_t p, int64_t q, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = count_lens({p, q});
  });
}

cc_status cc_count_minimal(int64_t p, int64_t q, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = count_minimal(p, q);
  });
}

cc_status cc_count_solid_torus(int64_t p, int64_t q, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = count_solid_torus(p, q);
  });
}

cc_status cc_count_t2i(int64_t p, int64_t q, int64_t n, int64_t* count, int* modulo_holonomy) {
  return guarded([&] {
    require(count, "count");
    T2ICount c = count_t2i(p, q, n);
    *count = c.count;
    if (modulo_holonomy) *modulo_holonomy = c.modulo_holonomy ? 1 : 0;
  });
}

cc_status cc_count_nonrotative(int n0, int n1, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = count_nonrotative(n0, n1);
  });
}

cc_status cc_run(const char* operation, const char* request_json, cc_document** out) {
  return guarded([&] {
    require(operation, "operation");
    require(out, "out");
    *out = nullptr;
    Json req = request_json && *request_json ? parse_json(request_json) : Json::object();
    if (!req.is_object()) fail(ErrorCode::Parse, "request must be a JSON object");
    std::string op = operation;
    if (op == "diagram") {
      *out = make_document(run_diagram(req));
      return;
    }
    auto it = handlers().find(op);
    if (it == handlers().end()) fail(ErrorCode::InvalidArgument, "unknown operation '" + op + "'");
    *out = make_document(it->second(req).dump(2) + "\n");
  });
}

cc_status cc_config_from_json(const char* json, cc_config** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new cc_config{annulus_from_json(parse_json(json))};
  });
}

cc_status cc_config_to_json(const cc_config* config, cc_document** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = make_document(to_json(config->value).dump());
  });
}

void cc_config_free(cc_config* config) { delete config; }

cc_status cc_config_crossing_count(const cc_config* config, int* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = config->value.crossing_count();
  });
}

cc_status cc_config_glue(const cc_config* lower, const cc_config* upper, cc_config** out, int* trivial_closed,
                         int* essential_closed, int* identity) {
  return guarded([&] {
    require(lower, "lower");
    require(upper, "upper");
    GlueOutcome g = glue(lower->value, upper->value);
    if (trivial_closed) *trivial_closed = g.trivial_closed;
    if (essential_closed) *essential_closed = g.essential_closed;
    if (identity) *identity = is_identity_gluing(g) ? 1 : 0;
    if (out) *out = new cc_config{std::move(g.config)};
  });
}

cc_status cc_config_reflexive(const cc_config* config, int window, int* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    require_window(window);
    *out = reflexive_check(config->value, window) ? 1 : 0;
  });
}

cc_status cc_config_disk_equivalent(const cc_config* a, const cc_config* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = disk_equivalent(a->value, b->value) ? 1 : 0;
  });
}

}  // extern "C"
