// tesler: command-line front end for the Tesler polytope library.
//
// stdout carries results only, so identical invocations print identical
// bytes. Timing goes to stderr (and into JSON with --timing).
// Exit codes: 0 success, 1 usage error, 2 internal invariant failure.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tesler/faces.hpp"
#include "tesler/harmonics.hpp"
#include "tesler/io.hpp"
#include "tesler/kostant.hpp"
#include "tesler/verify.hpp"
#include "tesler/volume.hpp"

using namespace tesler;
using io::Json;

namespace {

struct Globals {
  std::string format = "text";
  unsigned threads = 1;
  bool timing = false;
};

class VerifyFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool json_out(const Globals& g) { return g.format == "json"; }

Json result(const std::string& command, Json inputs) {
  Json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  return r;
}

void emit(const Globals& g, Json r, const std::string& text, double ms) {
  if (json_out(g)) {
    if (g.timing) r["elapsed_ms"] = ms;
    std::cout << r.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

// ------------------------------------------------------------------ count

int cmd_count(const Globals& g, const std::string& hooks_text, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  const HookSums a = io::parse_hooks(hooks_text);
  const BigInt value = count_tesler(a);
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json r = result("count", {{"hooks", io::to_json(a)}});
  r["value"] = io::big_to_json(value);
  emit(g, std::move(r), value.str(), ms);
  return 0;
}

// -------------------------------------------------------------- enumerate

int cmd_enumerate(const Globals& g, const std::string& hooks_text, std::optional<std::size_t> limit) {
  const HookSums a = io::parse_hooks(hooks_text);
  std::size_t emitted = 0;
  const bool json = json_out(g);
  if (json) {
    Json inputs = {{"hooks", io::to_json(a)}};
    if (limit) inputs["limit"] = *limit;
    std::cout << "{\n  \"command\": \"enumerate\",\n  \"inputs\": " << inputs.dump() << ",\n  \"records\": [";
  }
  for_each_tesler(a, [&](const TeslerMatrix& m) {
    if (limit && emitted >= *limit) return false;
    if (json) {
      std::cout << (emitted ? ",\n    " : "\n    ") << io::to_json(m).dump();
    } else {
      if (emitted) std::cout << '\n';
      std::cout << io::render_matrix(m);
    }
    ++emitted;
    return true;
  });
  if (json) {
    std::cout << (emitted ? "\n  ]" : "]") << ",\n  \"count\": " << emitted << "\n}\n";
  } else {
    std::cout << "\n" << emitted << (emitted == 1 ? " matrix" : " matrices") << '\n';
  }
  return 0;
}

// ----------------------------------------------------------------- volume

int cmd_volume(const Globals& g, const std::optional<std::string>& hooks_text, std::optional<int> ones,
               std::optional<int> cry, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  Json inputs = Json::object();
  BigInt value;
  if (hooks_text) {
    const HookSums a = io::parse_hooks(*hooks_text);
    inputs["hooks"] = io::to_json(a);
    value = lidskii_volume(a);
  } else if (ones) {
    inputs["ones"] = *ones;
    value = vol_ones_closed(*ones);
  } else {
    inputs["cry"] = *cry;
    value = cry_volume(*cry);
  }
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json r = result("volume", std::move(inputs));
  r["value"] = io::big_to_json(value);
  emit(g, std::move(r), value.str(), ms);
  return 0;
}

// ------------------------------------------------------------------ faces

enum class FacesQuery { FVector, HVector, Vertices, Simple };

int cmd_faces(const Globals& g, const std::string& hooks_text, FacesQuery query, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  const HookSums given = io::parse_hooks(hooks_text);
  const HookSums a = reduce_hooks(given);
  Json inputs = {{"hooks", io::to_json(given)}, {"reduced", io::to_json(a)}};
  Json r;
  std::string text;
  switch (query) {
    case FacesQuery::FVector: {
      const auto f = f_vector(a);
      r = result("faces", std::move(inputs));
      r["fvector"] = Json::array();
      for (const auto& v : f) r["fvector"].push_back(io::big_to_json(v));
      text = io::join(f);
      break;
    }
    case FacesQuery::HVector: {
      const auto h = h_vector(a);
      r = result("faces", std::move(inputs));
      r["hvector"] = Json::array();
      for (const auto& v : h) r["hvector"].push_back(io::big_to_json(v));
      text = io::join(h);
      break;
    }
    case FacesQuery::Vertices: {
      const auto verts = vertices(a);
      r = result("faces", std::move(inputs));
      r["vertices"] = Json::array();
      for (std::size_t k = 0; k < verts.size(); ++k) {
        r["vertices"].push_back(io::to_json(verts[k]));
        text += (k ? "\n" : "") + io::render_matrix(verts[k]);
      }
      text += "\n" + std::to_string(verts.size()) + (verts.size() == 1 ? " vertex" : " vertices");
      break;
    }
    case FacesQuery::Simple: {
      const bool simple = is_simple(a);
      r = result("faces", std::move(inputs));
      r["signature"] = to_string(signature(a));
      r["simple"] = simple;
      text = simple ? "true" : "false";
      break;
    }
  }
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(g, std::move(r), text, ms);
  return 0;
}

// ---------------------------------------------------------------- hilbert

int cmd_hilbert(const Globals& g, int n, const std::string& weights, bool oracle,
                const std::optional<std::string>& eval, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 1) throw std::domain_error("--n must be at least 1");
  const bool haglund = weights == "haglund";
  const QTPoly p = haglund ? hilbert_dh(n, g.threads) : hilbert_alternant(n, g.threads);
  Json inputs = {{"n", n}, {"weights", weights}};
  if (oracle) inputs["oracle"] = haglund ? "parking" : "dyck";
  if (eval) inputs["eval"] = *eval;
  Json r = result("hilbert", std::move(inputs));
  std::string text;
  bool mismatch = false;
  if (oracle) {
    const QTPoly other = haglund ? parking_gf(n) : qt_catalan(n);
    mismatch = other != p;
    text = mismatch ? "MISMATCH" : "MATCH";
    r["oracle"] = text;
  } else if (eval) {
    const auto [q, t] = io::parse_point(*eval);
    const BigInt v = p.evaluate(q, t);
    text = v.str();
    r["value"] = io::big_to_json(v);
  } else {
    text = to_string(p);
    r["value"] = io::to_json(p);
  }
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(g, std::move(r), text, ms);
  if (mismatch) throw VerifyFailed("Tesler sum and oracle disagree");
  return 0;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const Globals& g, const std::string& suite_text, int nmax, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  const Suite suite = parse_suite(suite_text);
  const auto checks = run_suite(suite, nmax, g.threads);
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::size_t passed = 0;
  Json r = result("verify", {{"suite", std::string(suite_name(suite))}, {"nmax", nmax}});
  r["checks"] = Json::array();
  std::string text;
  for (const auto& c : checks) {
    if (c.passed) ++passed;
    Json item = {{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (g.timing) item["elapsed_ms"] = c.elapsed_ms;
    r["checks"].push_back(std::move(item));
    text += std::string(c.passed ? "PASS" : "FAIL") + "  [" + c.suite + "] " + c.name + ": " + c.detail + "\n";
  }
  r["passed"] = passed;
  r["total"] = checks.size();
  text += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed";
  emit(g, std::move(r), text, ms);
  if (passed != checks.size()) throw VerifyFailed(std::to_string(checks.size() - passed) + " checks failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tesler matrices, flow polytopes and their q,t-weighted sums"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", g.threads, "Worker threads for the q,t sums")->check(CLI::Range(1U, 256U));
  app.add_flag("--timing", g.timing, "Include elapsed milliseconds in JSON output");

  std::string hooks;
  auto* count = app.add_subcommand("count", "Number of Tesler matrices with the given hook sums");
  count->add_option("--hooks", hooks, "Comma-separated hook sums")->required();

  std::optional<std::size_t> limit;
  auto* enumerate = app.add_subcommand("enumerate", "List Tesler matrices in lexicographic order");
  enumerate->add_option("--hooks", hooks, "Comma-separated hook sums")->required();
  enumerate->add_option("--limit", limit, "Stop after this many records");

  std::optional<std::string> volume_hooks;
  std::optional<int> ones, cry;
  auto* volume = app.add_subcommand("volume", "Normalized volume");
  auto* vol_group = volume->add_option_group("source");
  vol_group->add_option("--hooks", volume_hooks, "Lidskii volume of Tes_n(a)");
  vol_group->add_option("--ones", ones, "Closed form for Tes_n(1,...,1)");
  vol_group->add_option("--cry", cry, "Chan-Robbins-Yuen polytope on n vertices");
  vol_group->require_option(1);

  FacesQuery query = FacesQuery::FVector;
  bool fvec = false, hvec = false, verts = false, simple = false;
  auto* faces = app.add_subcommand("faces", "Face structure of Tes_n(a); leading zeros are stripped");
  faces->add_option("--hooks", hooks, "Comma-separated hook sums")->required();
  auto* faces_group = faces->add_option_group("query");
  faces_group->add_flag("--fvector", fvec, "Faces by dimension");
  faces_group->add_flag("--hvector", hvec, "h-vector (simple polytopes only)");
  faces_group->add_flag("--vertices", verts, "Vertex matrices");
  faces_group->add_flag("--simple", simple, "Simplicity by signature");
  faces_group->require_option(1);

  int n = 0;
  std::string weights = "haglund";
  bool oracle = false;
  std::optional<std::string> eval;
  auto* hilbert = app.add_subcommand("hilbert", "q,t-weighted sum over T_n(1,...,1)");
  hilbert->add_option("--n", n, "Matrix size")->required();
  hilbert->add_option("--weights", weights, "haglund or gn")->check(CLI::IsMember({"haglund", "gn"}));
  auto* oracle_flag = hilbert->add_flag("--oracle", oracle, "Compare with the parking function or Dyck path sum");
  hilbert->add_option("--eval", eval, "Evaluate at integers q,t")->excludes(oracle_flag);

  std::string suite = "all";
  int nmax = 4;
  auto* verify = app.add_subcommand("verify", "Run the built-in cross-checks");
  verify->add_option("--suite", suite, "counts, volumes, faces, harmonics or all");
  verify->add_option("--nmax", nmax, "Largest size to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  double ms = 0;
  try {
    if (*count) {
      cmd_count(g, hooks, ms);
    } else if (*enumerate) {
      const auto start = std::chrono::steady_clock::now();
      cmd_enumerate(g, hooks, limit);
      ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    } else if (*volume) {
      cmd_volume(g, volume_hooks, ones, cry, ms);
    } else if (*faces) {
      if (fvec) query = FacesQuery::FVector;
      if (hvec) query = FacesQuery::HVector;
      if (verts) query = FacesQuery::Vertices;
      if (simple) query = FacesQuery::Simple;
      cmd_faces(g, hooks, query, ms);
    } else if (*hilbert) {
      cmd_hilbert(g, n, weights, oracle, eval, ms);
    } else if (*verify) {
      cmd_verify(g, suite, nmax, ms);
    }
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const VerifyFailed& e) {
    std::cerr << "elapsed_ms: " << ms << '\n' << "failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "elapsed_ms: " << ms << '\n';
  return 0;
}
