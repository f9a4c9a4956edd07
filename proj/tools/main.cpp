// contact-census: command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "contact_census/contact_census.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 1;
constexpr int kDefaultWindow = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Validates a rational argument and returns its canonical text.
std::string rational(const std::string& text, bool negate) {
  cc_slope s;
  if (cc_slope_parse(text.c_str(), &s) != CC_OK) throw UsageError(cc_last_error());
  if (negate) {
    s.p = -s.p;
    if (s.q == 0) s.p = 1;
  }
  if (s.q == 0) return "inf";
  return s.q == 1 ? std::to_string(s.p) : std::to_string(s.p) + "/" + std::to_string(s.q);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

// --from-json value: "-" for stdin, inline JSON, or a file path.
Json load_json(const std::string& source) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

int default_window() {
  const char* env = std::getenv("CONTACT_CENSUS_WINDOW");
  if (env == nullptr || *env == '\0') return kDefaultWindow;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000) throw UsageError("CONTACT_CENSUS_WINDOW must be an integer in [1, 1000]");
  return static_cast<int>(v);
}

int call(const std::string& op, const Json& request) {
  cc_document* doc = nullptr;
  cc_status st = cc_run(op.c_str(), request.dump().c_str(), &doc);
  if (st != CC_OK) {
    std::cerr << "contact-census: " << cc_last_error() << "\n";
    return st == CC_INTERNAL ? kExitInternal : kExitUsage;
  }
  std::cout << cc_document_text(doc);
  cc_document_free(doc);
  return 0;
}

// "-inf" reads like a flag; infinity has no sign anyway.
std::vector<std::string> preprocess(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a == "-inf" || a == "-infinity" || a == "-oo") a = "inf";
    args.push_back(a);
  }
  return args;  // CLI11 expects reverse order
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight contact structure census: Farey paths, continued fractions, basic slices, "
               "lens spaces and dividing-set configurations.",
               "contact-census"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cc_version());

  std::string op;
  Json req = Json::object();
  std::string p_text, q_text, n_text, a_text, b_text, from_json, chain, signs, format = "svg";
  std::int64_t p = 0, q = 0, n = 0;
  std::optional<int> window;
  int far = 0, n0 = 0, n1 = 0, t = 0, depth = 4;
  bool negate = false, clockwise = false;

  auto pq = [&](CLI::App* sub) {
    sub->add_option("p", p, "numerator of -p/q")->required();
    sub->add_option("q", q, "denominator of -p/q")->required();
  };
  auto window_opt = [&](CLI::App* sub) {
    sub->add_option("--window", window, "holonomy window (default: CONTACT_CENSUS_WINDOW or 8)");
  };
  auto json_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--from-json", from_json, "JSON input: file path, '-' for stdin, or inline text");
    if (required) o->required();
  };

  auto* cf = app.add_subcommand("cf", "negative continued fraction of -p/q");
  pq(cf);
  cf->callback([&] {
    op = "cf";
    req = {{"p", p}, {"q", q}};
  });

  auto* farey = app.add_subcommand("farey", "Farey graph operations");
  farey->require_subcommand(1);
  auto* fpath = farey->add_subcommand("path", "shortest counterclockwise path between two slopes");
  fpath->add_option("from", a_text)->required();
  fpath->add_option("to", b_text)->required();
  auto* fadj = farey->add_subcommand("adjacent", "are two slopes joined by a Farey edge");
  fadj->add_option("a", a_text)->required();
  fadj->add_option("b", b_text)->required();
  auto* fbyp = farey->add_subcommand("bypass", "slope after attaching a bypass along slope r to dividing slope s");
  fbyp->add_option("s", a_text)->required();
  fbyp->add_option("r", b_text)->required();
  fbyp->add_flag("--clockwise", clockwise, "use the clockwise arc convention");
  for (auto* sub : {fpath, fadj, fbyp})
    sub->add_flag("--negate", negate, "negate every rational argument (for writing -p/q as p/q)");
  fpath->callback([&] {
    op = "farey.path";
    req["from"] = rational(a_text, negate);
    req["to"] = rational(b_text, negate);
  });
  fadj->callback([&] {
    op = "farey.adjacent";
    req["a"] = rational(a_text, negate);
    req["b"] = rational(b_text, negate);
  });
  fbyp->callback([&] {
    op = "farey.bypass";
    req["s"] = rational(a_text, negate);
    req["r"] = rational(b_text, negate);
    req["orientation"] = clockwise ? "clockwise" : "counterclockwise";
  });

  auto* t2i = app.add_subcommand("t2i", "tight contact structures on T^2 x I");
  t2i->require_subcommand(1);
  auto* tcount = t2i->add_subcommand("count", "count with boundary slopes -p/q and -1 and n extra half turns");
  pq(tcount);
  tcount->add_option("n", n, "extra half turns")->check(CLI::NonNegativeNumber);
  auto* tenum = t2i->add_subcommand("enumerate", "list the classes");
  pq(tenum);
  tenum->add_option("n", n, "extra half turns")->check(CLI::NonNegativeNumber);
  window_opt(tenum);
  auto* teuler = t2i->add_subcommand("euler", "relative Euler class of descriptors or factorizations");
  json_opt(teuler, false);
  teuler->add_option("--chain", chain, "comma-separated slope chain");
  teuler->add_option("--signs", signs, "comma-separated signs (+ or -)");
  auto* tglue = t2i->add_subcommand("glue-check", "reduce a chain of basic slices to normal form");
  json_opt(tglue, false);
  tglue->add_option("--chain", chain, "comma-separated slope chain");
  tglue->add_option("--signs", signs, "comma-separated signs (+ or -)");
  auto* ttwist = t2i->add_subcommand("twisting", "half turns of a slope chain");
  json_opt(ttwist, false);
  ttwist->add_option("--chain", chain, "comma-separated slope chain");

  auto chain_request = [&](bool with_signs) {
    if (!from_json.empty()) {
      req = load_json(from_json);
      if (!req.is_object()) throw UsageError("--from-json must hold a JSON object");
      return;
    }
    if (chain.empty()) throw UsageError("give --chain or --from-json");
    Json c = Json::array();
    for (const std::string& s : split_list(chain)) c.push_back(rational(s, false));
    req["chain"] = c;
    if (!with_signs) return;
    Json sg = Json::array();
    for (const std::string& s : split_list(signs)) {
      if (s == "+" || s == "1" || s == "+1") sg.push_back(1);
      else if (s == "-" || s == "-1") sg.push_back(-1);
      else throw UsageError("sign must be + or -, got '" + s + "'");
    }
    req["signs"] = sg;
  };
  tcount->callback([&] {
    op = "t2i.count";
    req = {{"p", p}, {"q", q}, {"n", n}};
  });
  tenum->callback([&] {
    op = "t2i.enumerate";
    req = {{"p", p}, {"q", q}, {"n", n}, {"window", window.value_or(default_window())}};
  });
  teuler->callback([&] {
    op = "t2i.euler";
    chain_request(true);
  });
  tglue->callback([&] {
    op = "t2i.glue-check";
    chain_request(true);
  });
  ttwist->callback([&] {
    op = "t2i.twisting";
    chain_request(false);
  });

  auto* lens = app.add_subcommand("lens", "tight contact structures on the lens space L(p,q)");
  lens->require_subcommand(1);
  const std::pair<const char*, const char*> lens_ops[] = {
      {"count", "number of tight structures"},
      {"enumerate", "list the structures with rotation numbers"},
      {"ut-count", "number of universally tight structures"}};
  for (auto [name, help] : lens_ops) {
    auto* sub = lens->add_subcommand(name, help);
    pq(sub);
    sub->callback([&, name] {
      op = std::string("lens.") + name;
      req = {{"p", p}, {"q", q}};
    });
  }

  auto* solid = app.add_subcommand("solidtorus", "tight solid tori with boundary slope -p/q");
  solid->require_subcommand(1);
  const std::pair<const char*, const char*> solid_ops[] = {
      {"count", "number of tight structures"}, {"enumerate", "list the structures with meridian rotation numbers"}};
  for (auto [name, help] : solid_ops) {
    auto* sub = solid->add_subcommand(name, help);
    pq(sub);
    sub->callback([&, name] {
      op = std::string("solidtorus.") + name;
      req = {{"p", p}, {"q", q}};
    });
  }

  auto* div = app.add_subcommand("divsets", "dividing sets and annulus configurations");
  div->require_subcommand(1);
  auto* denum = div->add_subcommand("enumerate", "nonrotative configurations modulo holonomy");
  denum->add_option("n0", n0, "half the inner markings")->required();
  denum->add_option("n1", n1, "half the outer markings")->required();
  window_opt(denum);
  auto* ddual = div->add_subcommand("dual", "dual set of a configuration");
  json_opt(ddual, true);
  ddual->add_option("--far", far, "markings on the template's far circle (default: inner markings)");
  window_opt(ddual);
  auto* drefl = div->add_subcommand("reflexive", "check that the dual of the dual is the configuration");
  json_opt(drefl, true);
  window_opt(drefl);
  auto* dequiv = div->add_subcommand("disk-equiv", "compare two configurations after capping the inner circle");
  dequiv->add_option("a", a_text, "first configuration (JSON, file or '-')")->required();
  dequiv->add_option("b", b_text, "second configuration (JSON, file or '-')")->required();
  auto* dglue = div->add_subcommand("glue", "stack the upper configuration on the lower one");
  dglue->add_option("lower", a_text, "inner configuration (file, '-' or inline JSON)")->required();
  dglue->add_option("upper", b_text, "outer configuration (file, '-' or inline JSON)")->required();
  auto* dbyp = div->add_subcommand("bypass", "attach a bypass to 2n curves of slope s along slope r");
  dbyp->add_option("n", n)->required();
  dbyp->add_option("s", p_text)->required();
  dbyp->add_option("r", q_text)->required();
  dbyp->add_flag("--clockwise", clockwise, "use the clockwise arc convention");
  dbyp->add_flag("--negate", negate, "negate every rational argument");
  auto* ddisk = div->add_subcommand("disk", "chord diagrams on a disk with 2t markings");
  ddisk->add_option("t", t)->required();

  auto with_window = [&](Json r) {
    r["window"] = window.value_or(default_window());
    return r;
  };
  denum->callback([&] {
    op = "divsets.enumerate";
    req = with_window({{"n0", n0}, {"n1", n1}});
  });
  ddual->callback([&] {
    op = "divsets.dual";
    req = with_window({{"config", load_json(from_json)}});
    if (far > 0) req["far"] = far;
  });
  drefl->callback([&] {
    op = "divsets.reflexive";
    req = with_window({{"config", load_json(from_json)}});
  });
  dequiv->callback([&] {
    op = "divsets.disk-equiv";
    req = {{"a", load_json(a_text)}, {"b", load_json(b_text)}};
  });
  dglue->callback([&] {
    op = "divsets.glue";
    req = {{"lower", load_json(a_text)}, {"upper", load_json(b_text)}};
  });
  dbyp->callback([&] {
    op = "divsets.bypass";
    req = {{"n", n},
           {"slope", rational(p_text, negate)},
           {"r", rational(q_text, negate)},
           {"orientation", clockwise ? "clockwise" : "counterclockwise"}};
  });
  ddisk->callback([&] {
    op = "divsets.disk";
    req = {{"t", t}};
  });

  auto* diag = app.add_subcommand("diagram", "SVG or DOT rendering");
  diag->require_subcommand(1);
  auto* dfarey = diag->add_subcommand("farey", "Farey tessellation");
  dfarey->add_option("--depth", depth, "mediant depth")->check(CLI::Range(0, 10));
  auto* dchord = diag->add_subcommand("chord", "disk or annulus chord diagram");
  json_opt(dchord, false);
  for (auto* sub : {dfarey, dchord})
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"svg", "dot"}));
  dfarey->callback([&] {
    op = "diagram";
    req = {{"kind", "farey"}, {"payload", Json{{"depth", depth}}}, {"format", format}};
  });
  dchord->callback([&] {
    op = "diagram";
    req = {{"kind", "chord"}, {"payload", from_json.empty() ? Json(nullptr) : load_json(from_json)}, {"format", format}};
  });

  try {
    std::vector<std::string> args = preprocess(argc, argv);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "contact-census: " << e.what() << "\n";
    return kExitUsage;
  }
  return call(op, req);
}
