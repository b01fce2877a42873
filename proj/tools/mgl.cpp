// mgl: batch experiment runner for subgroup-space computations. Every verb
// writes its tables plus a manifest recording parameters, seeds, budgets
// and output digests; identical manifest inputs produce byte-identical
// tables regardless of thread count.

#include <chrono>
#include <clocale>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"

#include "mgl/dehn.hpp"
#include "mgl/enumerate.hpp"
#include "mgl/fingerprint.hpp"
#include "mgl/grigorchuk.hpp"
#include "mgl/lattice.hpp"
#include "mgl/one_relator.hpp"
#include "mgl/pieces.hpp"
#include "mgl/ps.hpp"
#include "mgl/rational.hpp"
#include "mgl/tables.hpp"
#include "mgl/word.hpp"

namespace {

using nlohmann::json;

struct RunContext {
  std::string out_dir = ".";
  std::string format = "tsv";
  std::uint64_t budget = mgl::kDefaultBudget;
  int threads = 1;
  std::uint64_t seed = 1;
  mgl::RunManifest manifest;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit_table(const mgl::Table& t) {
    std::string bytes = format == "json" ? t.to_json() : t.to_tsv();
    std::string path = out_dir + "/" + t.name + (format == "json" ? ".json" : ".tsv");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << bytes;
    manifest.outputs.emplace_back(path, mgl::hex64(mgl::fnv1a64(bytes)));
    std::cout << bytes;
  }

  void emit_text(const std::string& name, const std::string& bytes) {
    std::string path = out_dir + "/" + name;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << bytes;
    manifest.outputs.emplace_back(path, mgl::hex64(mgl::fnv1a64(bytes)));
  }

  void finish(const std::string& verb) {
    manifest.artifact_version = mgl::kArtifactVersion;
    manifest.verb = verb;
    manifest.budget = budget;
    manifest.threads = threads;
    manifest.wall_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    std::string path = out_dir + "/" + verb + ".manifest.json";
    std::ofstream os(path, std::ios::binary);
    os << manifest.to_json();
  }
};

std::string fd(double v) { return mgl::format_double(v); }
std::string fu(std::uint64_t v) { return mgl::format_u64(v); }

mgl::Table plot_table(const std::string& name,
                      const std::vector<std::tuple<std::string, int, double>>& points) {
  mgl::Table t{name, {"series", "n", "value"}, {}};
  for (const auto& [series, n, value] : points) {
    if (std::isnan(value)) continue;
    t.add_row({series, std::to_string(n), fd(value)});
  }
  return t;
}

std::vector<mgl::Word> parse_relators(const std::vector<std::string>& texts, int m) {
  std::vector<mgl::Word> out;
  out.reserve(texts.size());
  for (const auto& s : texts) out.push_back(mgl::parse_word(s, m));
  return out;
}

json trace_json(const mgl::Word& w, const mgl::DehnResult& res) {
  json steps = json::array();
  for (const auto& st : res.steps)
    steps.push_back({{"position", st.position},
                     {"relator", st.relator},
                     {"conjugate_offset", st.conjugate_offset},
                     {"replaced_length", st.replaced_length}});
  return json{{"word", mgl::format_word(w)}, {"member", res.member}, {"steps", steps}};
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_NUMERIC, "C");
  CLI::App app{"mgl: exact experiments on spaces of marked groups"};
  app.require_subcommand(1);

  RunContext ctx;
  if (const char* env = std::getenv("MGL_BUDGET")) ctx.budget = std::strtoull(env, nullptr, 10);

  int m = 2, n = 2, k = 1, q = 2, n_min = 1, n_max = 0, L = 4;
  std::string lambda_text = "1/6", word_text, omega_text = "0", omega2_text = "0";
  std::string fp_a, fp_b;
  std::vector<std::string> relator_texts;
  std::uint64_t samples = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", ctx.out_dir, "output directory");
    sub->add_option("--format", ctx.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--budget", ctx.budget, "enumeration budget (words)");
    sub->add_option("--threads", ctx.threads, "worker threads");
    sub->add_option("--seed", ctx.seed, "random seed for sampling modes");
  };

  auto* ball = app.add_subcommand("ball", "ball sizes, formula vs radius");
  ball->add_option("-m", m)->required();
  ball->add_option("-n", n)->required();
  add_common(ball);

  auto* cyc = app.add_subcommand("cyc", "cyclically reduced word counts");
  cyc->add_option("-m", m)->required();
  cyc->add_option("-n", n)->required();
  add_common(cyc);

  auto* growth = app.add_subcommand("growth", "growth table beta, sigma");
  growth->add_option("-m", m)->required();
  growth->add_option("-n", n)->required();
  add_common(growth);

  auto* dist = app.add_subcommand("distance", "ultrametric distance of two fingerprint files");
  dist->add_option("--fp-a", fp_a)->required();
  dist->add_option("--fp-b", fp_b)->required();
  add_common(dist);

  auto* cpr = app.add_subcommand("check-cprime", "C'(lambda) check with witness");
  cpr->add_option("-m", m)->required();
  cpr->add_option("-r", relator_texts, "relator words")->required();
  cpr->add_option("--lambda", lambda_text);
  add_common(cpr);

  auto* dehn = app.add_subcommand("dehn", "Dehn membership with trace");
  dehn->add_option("-m", m)->required();
  dehn->add_option("-r", relator_texts, "relator words")->required();
  dehn->add_option("--lambda", lambda_text);
  dehn->add_option("-w", word_text, "word to test")->required();
  add_common(dehn);

  auto* fp = app.add_subcommand("fingerprint", "normal-closure ball fingerprint");
  fp->add_option("-m", m)->required();
  fp->add_option("-r", relator_texts, "relator words")->required();
  fp->add_option("--lambda", lambda_text);
  fp->add_option("-n", n, "ball radius")->required();
  add_common(fp);

  auto* psdim = app.add_subcommand("ps-dim", "small-cancellation dimension experiment");
  psdim->add_option("-m", m)->required();
  psdim->add_option("-k", k);
  psdim->add_option("--lambda", lambda_text);
  psdim->add_option("--nmin", n_min);
  psdim->add_option("-n,--nmax", n_max)->required();
  psdim->add_option("--samples", samples, "sampled density instead of exhaustive count");
  add_common(psdim);

  auto* urdim = app.add_subcommand("ur-dim", "one-relator power dimension experiment");
  urdim->add_option("-m", m)->required();
  urdim->add_option("-q", q);
  urdim->add_option("--nmin", n_min);
  urdim->add_option("-n,--nmax", n_max)->required();
  add_common(urdim);

  auto* gmem = app.add_subcommand("grig-member", "oracle membership");
  gmem->add_option("-w", word_text)->required();
  gmem->add_option("--omega", omega_text)->required();
  add_common(gmem);

  auto* gfp = app.add_subcommand("grig-fingerprint", "oracle subgroup fingerprint");
  gfp->add_option("--omega", omega_text)->required();
  gfp->add_option("-n", L, "length cap")->required();
  add_common(gfp);

  auto* gprop = app.add_subcommand("grig-prop62", "prefix agreement vs fingerprint distance");
  gprop->add_option("--omega1", omega_text)->required();
  gprop->add_option("--omega2", omega2_text)->required();
  gprop->add_option("-n", n)->required();
  add_common(gprop);

  auto* zmc = app.add_subcommand("zm-cover", "exact covering numbers of subgroups of Z^m");
  zmc->add_option("-m", m)->required();
  zmc->add_option("-n", n)->required();
  add_common(zmc);

  auto* zmd = app.add_subcommand("zm-dim", "abelian dimension experiment");
  zmd->add_option("-m", m)->required();
  zmd->add_option("--nmin", n_min);
  zmd->add_option("-n,--nmax", n_max)->required();
  add_common(zmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::ostringstream cmd;
  for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
  ctx.manifest.command = cmd.str();
  auto P = [&](const std::string& key, const std::string& value) {
    ctx.manifest.params[key] = value;
  };
  P("seed", std::to_string(ctx.seed));

  try {
    std::filesystem::create_directories(ctx.out_dir);
    mgl::Rational lambda = mgl::Rational::parse(lambda_text);

    if (ball->parsed()) {
      P("m", std::to_string(m)), P("n", std::to_string(n));
      mgl::Table t{"ball", {"n", "beta"}, {}};
      for (int r = 0; r <= n; ++r) t.add_row({std::to_string(r), fu(mgl::ball_size(m, r))});
      ctx.emit_table(t);
      ctx.finish("ball");
    } else if (cyc->parsed()) {
      P("m", std::to_string(m)), P("n", std::to_string(n));
      mgl::Table t{"cyc", {"n", "count", "count_over_q_n"}, {}};
      for (int r = 1; r <= n; ++r) {
        std::uint64_t c = mgl::count_cyc(m, r, ctx.budget);
        t.add_row({std::to_string(r), fu(c),
                   fd(static_cast<double>(c) / std::pow(2.0 * m - 1.0, r))});
      }
      ctx.emit_table(t);
      ctx.finish("cyc");
    } else if (growth->parsed()) {
      P("m", std::to_string(m)), P("n", std::to_string(n));
      mgl::Table t{"growth", {"n", "beta", "sigma", "beta_over_n", "beta_root"}, {}};
      for (const auto& row : mgl::growth_stats(m, n, ctx.budget))
        t.add_row({std::to_string(row.n), fu(row.beta), fu(row.sigma), fd(row.beta_over_n),
                   fd(row.beta_root)});
      ctx.emit_table(t);
      ctx.finish("growth");
    } else if (dist->parsed()) {
      P("fp-a", fp_a), P("fp-b", fp_b);
      std::ifstream fa(fp_a), fb(fp_b);
      if (!fa || !fb) throw std::invalid_argument("cannot open fingerprint file");
      auto A = mgl::read_fingerprints(fa), B = mgl::read_fingerprints(fb);
      if (A.empty() || B.empty()) throw std::invalid_argument("empty fingerprint file");
      mgl::Valuation v = mgl::valuation(A.front(), B.front());
      mgl::DyadicDistance d = mgl::distance(A.front(), B.front());
      mgl::Table t{"distance", {"probe", "valuation", "distance", "exact"}, {}};
      t.add_row({std::to_string(v.probe),
                 v.agree_through_probe ? ">=" + std::to_string(v.probe) : std::to_string(v.value),
                 fd(d.to_double()), d.upper_bound ? "upper_bound" : "exact"});
      ctx.emit_table(t);
      ctx.finish("distance");
    } else if (cpr->parsed()) {
      P("m", std::to_string(m)), P("lambda", lambda.str());
      auto relators = parse_relators(relator_texts, m);
      for (std::size_t i = 0; i < relators.size(); ++i)
        P("r" + std::to_string(i), mgl::format_word(relators[i]));
      mgl::CPrimeReport rep = mgl::check_c_prime(relators, lambda);
      mgl::Table t{"check-cprime", {"ok", "witness", "pair_i", "pair_j", "piece_length"}, {}};
      t.add_row({rep.ok ? "true" : "false", rep.ok ? "" : mgl::format_word(rep.witness),
                 std::to_string(rep.i), std::to_string(rep.j), std::to_string(rep.piece_length)});
      ctx.emit_table(t);
      ctx.finish("check-cprime");
    } else if (dehn->parsed()) {
      P("m", std::to_string(m)), P("lambda", lambda.str()), P("w", word_text);
      auto relators = parse_relators(relator_texts, m);
      for (std::size_t i = 0; i < relators.size(); ++i)
        P("r" + std::to_string(i), mgl::format_word(relators[i]));
      auto p = mgl::Presentation::small_cancellation(m, relators, lambda);
      mgl::Word w = mgl::parse_word(word_text, m);
      mgl::DehnResult res = mgl::dehn_member(w, p);
      mgl::Table t{"dehn", {"word", "member", "steps"}, {}};
      t.add_row({mgl::format_word(w), res.member ? "true" : "false",
                 std::to_string(res.steps.size())});
      ctx.emit_table(t);
      ctx.emit_text("dehn.trace.json", trace_json(w, res).dump() + "\n");
      ctx.finish("dehn");
    } else if (fp->parsed()) {
      P("m", std::to_string(m)), P("lambda", lambda.str()), P("n", std::to_string(n));
      auto relators = parse_relators(relator_texts, m);
      for (std::size_t i = 0; i < relators.size(); ++i)
        P("r" + std::to_string(i), mgl::format_word(relators[i]));
      auto p = mgl::Presentation::small_cancellation(m, relators, lambda);
      mgl::BallFingerprint f = mgl::closure_fingerprint(p, n, ctx.budget, ctx.threads);
      std::ostringstream fps;
      mgl::write_fingerprints(fps, {f});
      ctx.emit_text("fingerprint.fp", fps.str());
      mgl::Table t{"fingerprint", {"m", "n", "beta", "members"}, {}};
      t.add_row({std::to_string(m), std::to_string(n), fu(f.count()), fu(f.popcount())});
      ctx.emit_table(t);
      ctx.finish("fingerprint");
    } else if (psdim->parsed()) {
      if (n_max == 0) n_max = n_min;
      P("m", std::to_string(m)), P("k", std::to_string(k)), P("lambda", lambda.str());
      P("nmin", std::to_string(n_min)), P("nmax", std::to_string(n_max));
      if (samples > 0) {
        P("samples", std::to_string(samples));
        mgl::Table t{"ps-dim", {"n", "samples", "hits", "density", "std_error", "seed"}, {}};
        for (int r = n_min; r <= n_max; ++r) {
          auto d = mgl::sample_ps_density(m, k, lambda, r, samples, ctx.seed);
          t.add_row({std::to_string(r), fu(d.samples), fu(d.hits), fd(d.estimate),
                     fd(d.std_error), fu(d.seed)});
        }
        ctx.emit_table(t);
      } else {
        auto res = mgl::ps_dimension_experiment(m, k, lambda, n_min, n_max, ctx.budget, 4096,
                                                ctx.threads);
        mgl::Table t{"ps-dim",
                     {"n", "cyc_n", "ps_n", "fiber_bound", "lower_certificate", "exact_closures",
                      "s_tuples", "s_exact", "dim_lower", "dim_upper"},
                     {}};
        std::vector<std::tuple<std::string, int, double>> plot;
        for (const auto& row : res.rows) {
          t.add_row({std::to_string(row.n), fu(row.cyc_n), fu(row.ps_n), fd(row.fiber_bound),
                     fd(row.lower_certificate), mgl::format_i64(row.exact_closures),
                     fd(row.s_tuples), fd(row.s_exact), fd(res.dim_lower), fd(res.dim_upper)});
          double emp = row.exact_closures > 0 ? row.s_exact : row.s_tuples;
          plot.emplace_back("empirical", row.n, emp);
          plot.emplace_back("lower_bound", row.n, res.dim_lower);
          plot.emplace_back("upper_bound", row.n, res.dim_upper);
        }
        ctx.emit_table(t);
        ctx.emit_table(plot_table("ps-dim.plot", plot));
      }
      ctx.finish("ps-dim");
    } else if (urdim->parsed()) {
      if (n_max == 0) n_max = n_min;
      P("m", std::to_string(m)), P("q", std::to_string(q));
      P("nmin", std::to_string(n_min)), P("nmax", std::to_string(n_max));
      auto res = mgl::ur_dimension_experiment(m, q, n_min, n_max, ctx.budget, 4096, ctx.threads);
      mgl::Table t{"ur-dim",
                   {"n", "root_len", "cyc_roots", "classes", "fiber_bound", "lower_certificate",
                    "exact_fps", "s_classes", "s_exact", "dim_lower", "dim_upper"},
                   {}};
      std::vector<std::tuple<std::string, int, double>> plot;
      for (const auto& row : res.rows) {
        t.add_row({std::to_string(row.n), std::to_string(row.root_len), fu(row.cyc_roots),
                   fu(row.classes), fd(row.fiber_bound), fd(row.lower_certificate),
                   mgl::format_i64(row.exact_fps), fd(row.s_classes), fd(row.s_exact),
                   fd(res.dim_lower), fd(res.dim_upper)});
        double emp = row.exact_fps > 0 ? row.s_exact : row.s_classes;
        plot.emplace_back("empirical", row.n, emp);
        plot.emplace_back("lower_bound", row.n, res.dim_lower);
        plot.emplace_back("upper_bound", row.n, res.dim_upper);
      }
      ctx.emit_table(t);
      ctx.emit_table(plot_table("ur-dim.plot", plot));
      ctx.finish("ur-dim");
    } else if (gmem->parsed()) {
      P("w", word_text), P("omega", omega_text);
      auto omega = mgl::grig::OracleSeq::parse(omega_text);
      mgl::Word w = mgl::parse_word(word_text, mgl::grig::kAlphabet);
      auto verdict = mgl::grig::member(w, omega);
      mgl::Table t{"grig-member", {"word", "verdict", "nodes"}, {}};
      t.add_row({mgl::format_word(w), verdict.accepted ? "accepted" : "rejected",
                 std::to_string(verdict.nodes.size())});
      ctx.emit_table(t);
      std::cout << (verdict.accepted ? "accepted" : "rejected") << "\n";
      ctx.finish("grig-member");
    } else if (gfp->parsed()) {
      P("omega", omega_text), P("n", std::to_string(L));
      auto omega = mgl::grig::OracleSeq::parse(omega_text);
      auto f = mgl::grig::fingerprint_S(omega, L, ctx.budget, ctx.threads);
      std::ostringstream fps;
      mgl::write_fingerprints(fps, {f});
      ctx.emit_text("grig-fingerprint.fp", fps.str());
      mgl::Table t{"grig-fingerprint", {"omega", "L", "beta", "members"}, {}};
      t.add_row({omega.str(), std::to_string(L), fu(f.count()), fu(f.popcount())});
      ctx.emit_table(t);
      ctx.finish("grig-fingerprint");
    } else if (gprop->parsed()) {
      P("omega1", omega_text), P("omega2", omega2_text), P("n", std::to_string(n));
      auto o1 = mgl::grig::OracleSeq::parse(omega_text);
      auto o2 = mgl::grig::OracleSeq::parse(omega2_text);
      auto rep = mgl::grig::verify_prop62(o1, o2, n, ctx.budget, ctx.threads);
      mgl::Table t{"grig-prop62",
                   {"n", "agree_prefix", "part", "radius", "result", "separating_word",
                    "search_complete"},
                   {}};
      if (rep.part_i_applies) {
        t.add_row({std::to_string(rep.n), std::to_string(rep.agree_prefix), "i",
                   std::to_string(rep.checked_radius),
                   rep.fingerprints_equal ? "equal" : "DIFFER", "", "true"});
      } else {
        t.add_row({std::to_string(rep.n), std::to_string(rep.agree_prefix), "ii",
                   std::to_string(rep.search_radius),
                   rep.separated ? "separated" : "not-separated",
                   rep.separating_word ? mgl::format_word(*rep.separating_word) : "",
                   rep.search_complete ? "true" : "false"});
      }
      ctx.emit_table(t);
      ctx.finish("grig-prop62");
    } else if (zmc->parsed()) {
      P("m", std::to_string(m)), P("n", std::to_string(n));
      mgl::Table t{"zm-cover", {"n", "N", "exact", "subgroups"}, {}};
      for (int r = 1; r <= n; ++r) {
        auto cover = mgl::covering_number_Zm(m, r, ctx.budget);
        t.add_row({std::to_string(r), fu(cover.value), cover.exact ? "true" : "false",
                   fu(cover.subgroups)});
      }
      ctx.emit_table(t);
      ctx.finish("zm-cover");
    } else if (zmd->parsed()) {
      if (n_max == 0) n_max = n_min;
      P("m", std::to_string(m));
      P("nmin", std::to_string(n_min)), P("nmax", std::to_string(n_max));
      auto rows = mgl::zm_dimension_experiment(m, n_min, n_max, ctx.budget);
      mgl::Table t{"zm-dim", {"n", "b_n", "N", "exact", "bound", "s_n", "bn_over_nm"}, {}};
      std::vector<std::tuple<std::string, int, double>> plot;
      for (const auto& row : rows) {
        t.add_row({std::to_string(row.n), fu(row.b_n), fu(row.count),
                   row.exact ? "true" : "false", fu(row.bound), fd(row.s_n),
                   fd(row.bn_over_nm)});
        plot.emplace_back("empirical", row.n, row.s_n);
        plot.emplace_back("upper_bound", row.n,
                          std::log2(static_cast<double>(row.bound)) / row.n);
      }
      ctx.emit_table(t);
      ctx.emit_table(plot_table("zm-dim.plot", plot));
      ctx.finish("zm-dim");
    }
  } catch (const mgl::budget_error& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
