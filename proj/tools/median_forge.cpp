// median-forge: batch front end over the medianforge library.
//
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 on malformed input or an exceeded size guard.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "medianforge/closure.hpp"
#include "medianforge/deformation.hpp"
#include "medianforge/errors.hpp"
#include "medianforge/fixtures.hpp"
#include "medianforge/free_median.hpp"
#include "medianforge/io.hpp"
#include "medianforge/spectral.hpp"
#include "medianforge/zline.hpp"

namespace mf = medianforge;
using nlohmann::json;

namespace {

struct Report {
  json data = json::object();
  std::vector<std::string> lines;
  bool ok = true;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 0x6d656469616e;
  std::size_t jobs = 1;
};

mf::FiniteGroup load_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return mf::load_group_file(spec);
  if (spec == "trivial") return mf::FiniteGroup::trivial();
  if (spec.size() > 1 && spec[0] == 'z' && spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    return mf::FiniteGroup::cyclic(std::stoul(spec.substr(1)));
  }
  throw mf::MalformedInput("cannot open group " + spec + " (expected a file, 'trivial' or zN)");
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> word_strings(const mf::FreeProduct& fp, const std::vector<mf::Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(fp.to_string(w));
  return out;
}

// axioms ------------------------------------------------------------------

struct AxiomsArgs {
  std::string median;
};

Report run_axioms(const AxiomsArgs& a) {
  Report r;
  const auto m = mf::load_median_file(a.median, true);
  const auto report = mf::check_median_axioms(m.table());
  r.ok = report.passed();
  r.data["size"] = m.size();
  r.data["passed"] = r.ok;
  r.data["locally_linear"] = r.ok && mf::is_locally_linear(m);
  json vs = json::array();
  for (const auto& v : report.violations) {
    std::vector<mf::ElementId> args(v.args.begin(), v.args.begin() + static_cast<long>(v.arity));
    vs.push_back({{"axiom", mf::to_string(v.axiom)}, {"args", args}});
    std::string s;
    for (auto x : args) s += (s.empty() ? "" : ",") + std::to_string(x);
    r.line(mf::to_string(v.axiom) + " fails at (" + s + ")");
  }
  r.data["violations"] = vs;
  r.data["truncated"] = report.truncated;
  r.line("size " + std::to_string(m.size()));
  r.line(std::string("axioms ") + (r.ok ? "pass" : "FAIL"));
  if (r.ok) r.line(std::string("locally linear ") + (mf::is_locally_linear(m) ? "yes" : "no"));
  return r;
}

// spec ----------------------------------------------------------------------

Report run_spec(const std::string& path, bool unchecked) {
  Report r;
  const auto m = mf::load_median_file(path, unchecked);
  const auto primes = mf::spec(m);
  json ps = json::array();
  for (const auto& p : primes) {
    std::vector<std::string> labels;
    for (auto x : p.elements()) labels.push_back(m.label(x));
    ps.push_back(p.elements());
    r.line("prime {" + join(labels, ",") + "}");
  }
  r.data["primes"] = ps;
  const auto duality = mf::duality_check(m);
  const auto inv = mf::invariant_opens(m);
  r.ok = duality.passed && inv.passed;
  r.data["duality"] = {{"passed", duality.passed}, {"pairs", duality.pairs_checked}};
  r.data["invariant_opens"] = {{"passed", inv.passed}, {"count", inv.invariant.size()}};
  r.line(std::to_string(primes.size()) + " primes");
  r.line(std::string("duality ") + (duality.passed ? "pass" : "FAIL " + duality.counterexample) + " (" +
         std::to_string(duality.pairs_checked) + " pairs)");
  r.line(std::string("invariant opens ") + (inv.passed ? "pass" : "FAIL " + inv.counterexample) + " (" +
         std::to_string(inv.invariant.size()) + " found)");
  return r;
}

// fms -----------------------------------------------------------------------

struct FmsArgs {
  std::size_t base = 3;
  bool enumerate = false;
  bool closure = false;
  std::vector<std::string> median;
  std::string negate;
};

Report run_fms(const FmsArgs& a) {
  Report r;
  r.data["base"] = a.base;
  if (a.enumerate) {
    const auto elems = mf::fms_enumerate(a.base);
    json es = json::array();
    for (const auto& e : elems) {
      es.push_back(mf::to_string(e));
      r.line(mf::to_string(e));
    }
    r.data["elements"] = es;
    r.data["count"] = elems.size();
    r.line(std::to_string(elems.size()) + " elements");
  }
  const bool query = !a.median.empty() || !a.negate.empty();
  if (!a.enumerate && !a.closure && !query) {
    const auto n = mf::fms_enumerate(a.base).size();
    r.data["count"] = n;
    r.line(std::to_string(n) + " elements");
  }
  if (a.closure) {
    const auto n = mf::fms_majority_closure(a.base).size();
    r.data["majority_closure"] = n;
    r.line("majority closure: " + std::to_string(n) + " truth tables");
    if (a.enumerate && n != mf::fms_enumerate(a.base).size()) {
      r.ok = false;
      r.line("FAIL: enumeration and majority closure disagree");
    }
  }
  if (!a.median.empty()) {
    if (a.median.size() != 3) throw mf::MalformedInput("--median takes three elements");
    const mf::FmsElement x(mf::parse_fms(a.base, a.median[0])), y(mf::parse_fms(a.base, a.median[1])),
        z(mf::parse_fms(a.base, a.median[2]));
    const auto m = mf::to_string(mf::fms_median(x, y, z));
    r.data["median"] = m;
    r.line("median " + m);
  }
  if (!a.negate.empty()) {
    const auto n = mf::to_string(mf::fms_negate(mf::parse_fms(a.base, a.negate)));
    r.data["negation"] = n;
    r.line("negation " + n);
  }
  return r;
}

// words ---------------------------------------------------------------------

struct WordsArgs {
  std::string group = "trivial";
  std::size_t indices = 2;
  std::string names;
  std::string op;
  std::vector<std::string> operands;
  std::size_t radius = 2;
};

Report run_words(const WordsArgs& a) {
  Report r;
  mf::FreeProduct fp(load_group(a.group), a.indices, split_names(a.names));
  auto arg = [&](std::size_t i) {
    if (i >= a.operands.size()) throw mf::MalformedInput("words " + a.op + ": missing operand");
    return fp.parse(a.operands[i]);
  };
  if (a.op == "reduce") {
    const auto w = arg(0);
    r.data["word"] = fp.to_string(w);
    r.data["length"] = w.length();
    r.line(fp.to_string(w) + "  (length " + std::to_string(w.length()) + ")");
  } else if (a.op == "mul") {
    const auto w = fp.mul(arg(0), arg(1));
    r.data["product"] = fp.to_string(w);
    r.line(fp.to_string(w));
  } else if (a.op == "inv") {
    r.data["inverse"] = fp.to_string(fp.inv(arg(0)));
    r.line(r.data["inverse"].get<std::string>());
  } else if (a.op == "phi") {
    const auto w = arg(0);
    r.data["phi"] = fp.to_string(fp.phi(w));
    r.data["theta"] = fp.theta_hat(w);
    r.line("phi " + fp.to_string(fp.phi(w)) + "  theta h" + std::to_string(fp.theta_hat(w)));
  } else if (a.op == "meet" || a.op == "factorize") {
    const auto u = arg(0), v = arg(1);
    if (a.op == "meet") {
      r.data["meet"] = fp.to_string(fp.meet(u, v));
      r.line(r.data["meet"].get<std::string>());
    } else {
      const auto f = fp.factorize(u, v);
      r.data["u2"] = fp.to_string(f.u2);
      r.data["h"] = f.h;
      r.data["v2"] = fp.to_string(f.v2);
      r.line(fp.to_string(f.u2) + " | h" + std::to_string(f.h) + " | " + fp.to_string(f.v2));
    }
  } else if (a.op == "ball") {
    const auto ball = fp.ball(a.radius);
    r.data["count"] = ball.size();
    r.data["predicted"] = fp.ball_count(a.radius);
    r.ok = ball.size() == fp.ball_count(a.radius);
    r.data["words"] = word_strings(fp, ball);
    for (const auto& w : ball) r.line(fp.to_string(w));
    r.line(std::to_string(ball.size()) + " words");
  } else {
    throw mf::MalformedInput("unknown words operation '" + a.op + "'");
  }
  return r;
}

// deform --------------------------------------------------------------------

struct DeformArgs {
  std::string group = "trivial";
  std::size_t indices = 2;
  std::string median;
  std::string names;
  bool unchecked = false;
  std::string op;
  std::vector<std::string> operands;
  std::size_t radius = 3;
  std::size_t samples = 0;
  bool skip_m3 = false;
};

void add_verify(Report& r, const mf::VerifyReport& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    checks.push_back({{"name", c.name}, {"instances", c.instances}, {"failures", c.failures}, {"samples", c.samples}});
    std::ostringstream s;
    s << std::left << std::setw(26) << c.name << (c.failures == 0 ? "pass" : "FAIL") << "  " << c.failures << "/"
      << c.instances;
    r.line(s.str());
    for (const auto& x : c.samples) r.line("    " + x);
  }
  r.data["checks"] = checks;
  r.data["passed"] = v.passed();
  r.ok = r.ok && v.passed();
}

Report run_deform(const DeformArgs& a, const Globals& g) {
  Report r;
  const auto group = load_group(a.group);
  mf::FreeProduct fp(group, a.indices, split_names(a.names));
  if (a.op == "enumerate") {
    const auto ops = mf::enumerate_median_ops(group, a.indices);
    json out = json::array();
    for (const auto& m : ops) {
      out.push_back({{"shape", mf::shape_name(m)}, {"table", json::parse(mf::median_to_json(m))}});
      r.line(mf::shape_name(m));
    }
    r.data["operations"] = out;
    r.data["count"] = ops.size();
    r.line(std::to_string(ops.size()) + " compatible median operations");
    return r;
  }
  if (a.median.empty()) throw mf::MalformedInput("deform " + a.op + " needs --median");
  const auto m = mf::load_median_file(a.median, a.unchecked);
  const mf::DeformedGroup d(mf::HMedianSet(fp, m));
  auto arg = [&](std::size_t i) {
    if (i >= a.operands.size()) throw mf::MalformedInput("deform " + a.op + ": missing operand");
    return fp.parse(a.operands[i]);
  };
  if (a.op == "verify") {
    mf::VerifyOptions opts;
    opts.radius = a.radius;
    opts.jobs = g.jobs;
    opts.check_m3 = !a.skip_m3;
    add_verify(r, mf::verify_median_group(d, opts));
    if (a.samples > 0) {
      // Random triples from a wider ball, checked for compatibility and the
      // folding identity.
      const auto wide = fp.ball(a.radius + 2);
      std::mt19937_64 rng(g.seed);
      std::uniform_int_distribution<std::size_t> pick(0, wide.size() - 1);
      std::size_t fails = 0;
      for (std::size_t k = 0; k < a.samples; ++k) {
        const auto &s = wide[pick(rng)], &x = wide[pick(rng)], &y = wide[pick(rng)], &z = wide[pick(rng)];
        const bool ok = fp.mul(s, d.mhat(x, y, z)) == d.mhat(fp.mul(s, x), fp.mul(s, y), fp.mul(s, z)) &&
                        fp.embed(fp.phi(d.mhat(x, y, z))) ==
                            d.mhat(fp.embed(fp.phi(x)), y, fp.embed(fp.phi(z)));
        if (!ok) ++fails;
      }
      r.data["sampled"] = {{"seed", g.seed}, {"count", a.samples}, {"failures", fails}};
      r.line("sampled radius " + std::to_string(a.radius + 2) + ": " + std::to_string(fails) + "/" +
             std::to_string(a.samples) + " failures (seed " + std::to_string(g.seed) + ")");
      r.ok = r.ok && fails == 0;
    }
  } else if (a.op == "median") {
    const auto w = d.mhat(arg(0), arg(1), arg(2));
    r.data["median"] = fp.to_string(w);
    r.line(fp.to_string(w));
  } else if (a.op == "cap") {
    const auto w = d.cap(arg(0), arg(1));
    r.data["cap"] = fp.to_string(w);
    r.line(fp.to_string(w));
  } else if (a.op == "cell") {
    const auto u = arg(0), v = arg(1);
    const auto cell = d.deformed_cell(u, v);
    r.data["cell"] = word_strings(fp, cell);
    r.data["size"] = cell.size();
    for (const auto& w : cell) r.line(fp.to_string(w));
    r.line(std::to_string(cell.size()) + " words");
  } else if (a.op == "config") {
    const auto conf = d.configuration(arg(0));
    json es = json::array();
    r.line("w_i | zeta(w_i) | |J_i|");
    for (const auto& e : conf.entries) {
      es.push_back({{"w", fp.to_string(e.w)},
                    {"zeta", fp.to_string(e.zeta)},
                    {"lo", fp.to_string(e.interval_lo)},
                    {"hi", fp.to_string(e.interval_hi)},
                    {"size", e.interval_size}});
      r.line(fp.to_string(e.w) + " | " + fp.to_string(e.zeta) + " | " + std::to_string(e.interval_size));
    }
    r.data["entries"] = es;
  } else {
    throw mf::MalformedInput("unknown deform operation '" + a.op + "'");
  }
  return r;
}

// zline ---------------------------------------------------------------------

Report run_zline(const std::vector<std::string>& args) {
  Report r;
  if (args.empty()) throw mf::MalformedInput("zline needs verify, table or quotient");
  auto num = [&](std::size_t i) -> std::int64_t {
    if (i >= args.size()) throw mf::MalformedInput("zline " + args[0] + ": missing argument");
    try {
      return std::stoll(args[i]);
    } catch (const std::exception&) {
      throw mf::MalformedInput("zline: not an integer: " + args[i]);
    }
  };
  if (args[0] == "verify") {
    const auto n = num(1);
    json all = json::object();
    for (auto op : {mf::ZMedianOp::M0, mf::ZMedianOp::M1, mf::ZMedianOp::Mminus1}) {
      const auto w = mf::window_verify(op, n);
      all[mf::to_string(op)] = {{"passed", w.passed()}, {"translation_checked", w.compat_checked}};
      r.line(mf::to_string(op) + " on [-" + std::to_string(n) + "," + std::to_string(n) + "]: " +
             (w.passed() ? "pass" : "FAIL " + w.witness.value_or("")));
      r.ok = r.ok && w.passed();
    }
    r.data["window"] = all;
  } else if (args[0] == "table") {
    if (args.size() < 4) throw mf::MalformedInput("zline table op a b");
    const auto op = mf::parse_zop(args[1]);
    const auto a = num(2), b = num(3);
    if (b < a || b - a > 40) throw mf::MalformedInput("zline table: need a <= b with b - a <= 40");
    json rows = json::array();
    for (auto x = a; x <= b; ++x)
      for (auto y = x + 1; y <= b; ++y)
        for (auto z = y + 1; z <= b; ++z) {
          const auto v = mf::z_median(op, x, y, z);
          rows.push_back({x, y, z, v});
          r.line(mf::to_string(op) + "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                 ") = " + std::to_string(v));
        }
    r.data["op"] = mf::to_string(op);
    r.data["triples"] = rows;
  } else if (args[0] == "quotient") {
    const auto q = mf::z_quotient_check(num(1));
    r.ok = q.passed();
    r.data = {{"evens_convex", q.evens_convex},
              {"parity_morphism", q.parity_morphism},
              {"even_restriction", q.even_restriction}};
    r.line(std::string("evens convex under m1    ") + (q.evens_convex ? "pass" : "FAIL"));
    r.line(std::string("parity is a morphism     ") + (q.parity_morphism ? "pass" : "FAIL"));
    r.line(std::string("agreement on evens       ") + (q.even_restriction ? "pass" : "FAIL"));
    if (q.witness) r.line("witness " + *q.witness);
  } else {
    throw mf::MalformedInput("unknown zline operation '" + args[0] + "'");
  }
  return r;
}

// closure -------------------------------------------------------------------

struct ClosureArgs {
  std::string mode;
  std::size_t radius = 2;
  std::size_t depth = 1;
  std::string group = "trivial";
  std::size_t indices = 2;
  std::string median;
};

Report run_closure(const ClosureArgs& a) {
  Report r;
  const auto group = load_group(a.group);
  mf::FreeProduct fp(group, a.indices);
  const auto m = a.median.empty() ? mf::shapes::chain(group.order() * a.indices) : mf::load_median_file(a.median);
  mf::HMedianSet x(fp, m);
  if (a.mode == "rtc") {
    const auto rep = mf::rtc_fragment(mf::DeformedGroup(x), a.radius);
    r.ok = rep.passed();
    r.data = {{"radius", rep.radius},
              {"eval_radius", rep.eval_radius},
              {"handles", rep.handles},
              {"seeds", rep.seeds},
              {"fragment_size_lower_bound", rep.fragment_size},
              {"new_elements", rep.new_elements},
              {"pi_failures", rep.pi_failures},
              {"embed_failures", rep.embed_failures},
              {"retract_failures", rep.retract_failures},
              {"equivariance_failures", rep.equivariance_failures},
              {"freeness_failures", rep.freeness_failures},
              {"bridge_failures", rep.bridge_failures},
              {"passed", rep.passed()}};
    json samples = json::array();
    for (std::size_t i = 0; i < rep.elements.size() && i < 8; ++i)
      samples.push_back(mf::to_string(fp, rep.elements[i].element.expr()));
    r.data["sample_elements"] = samples;
    r.line("radius " + std::to_string(rep.radius) + ", handles sampled at radius " + std::to_string(rep.eval_radius) +
           " (" + std::to_string(rep.handles) + ")");
    r.line("fragment >= " + std::to_string(rep.fragment_size) + " distinct (" + std::to_string(rep.seeds) +
           " point opens, " + std::to_string(rep.new_elements) + " new)");
    r.line("pi failures " + std::to_string(rep.pi_failures) + ", embed " + std::to_string(rep.embed_failures) +
           ", retract " + std::to_string(rep.retract_failures) + ", equivariance " +
           std::to_string(rep.equivariance_failures + rep.h_equivariance_failures) + ", freeness " +
           std::to_string(rep.freeness_failures) + ", bridge " + std::to_string(rep.bridge_failures) + "/" +
           std::to_string(rep.bridge_checked));
    for (const auto& s : rep.samples) r.line("  " + s);
  } else if (a.mode == "tc") {
    const auto rep = mf::tc_iterate(x, a.depth, a.radius);
    r.ok = rep.passed();
    json levels = json::array();
    for (const auto& l : rep.levels) {
      levels.push_back({{"name", l.name}, {"size", l.size}, {"lower_bound", l.lower_bound}, {"note", l.note}});
      r.line(l.name + (l.lower_bound ? " >= " : " = ") + std::to_string(l.size) + "  " + l.note);
    }
    r.data["levels"] = levels;
    if (rep.cross_checked) {
      r.data["oracle"] = {{"enumeration", rep.oracle_count}, {"majority_closure", rep.majority_count}};
      r.line("free median oracle: enumeration " + std::to_string(rep.oracle_count) + ", majority closure " +
             std::to_string(rep.majority_count) + (rep.passed() ? " (match)" : " (MISMATCH)"));
    }
    r.data["passed"] = rep.passed();
  } else {
    throw mf::MalformedInput("closure mode must be rtc or tc");
  }
  return r;
}

// fixtures ------------------------------------------------------------------

Report run_fixtures(const std::string& out) {
  Report r;
  json files = json::array();
  if (!out.empty()) std::filesystem::create_directories(out);
  for (const auto& f : mf::fixtures()) {
    std::ostringstream h;
    h << std::hex << std::setw(16) << std::setfill('0') << mf::fnv1a64(f.content);
    files.push_back({{"name", f.name}, {"fnv1a64", h.str()}, {"bytes", f.content.size()}});
    r.line(h.str() + "  " + f.name);
  }
  if (!out.empty()) mf::write_fixtures(out);
  r.data["files"] = files;
  return r;
}

void emit(const Report& r, const Globals& g) {
  if (g.format == "json") {
    json j = r.data;
    j["ok"] = r.ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) std::cout << l << "\n";
  }
}

int fail(const Globals& g, const std::string& kind, const std::string& msg) {
  if (g.format == "json") {
    std::cout << json{{"error", kind}, {"message", msg}}.dump() << "\n";
  }
  std::cerr << "error: " << msg << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"median-forge: finite median algebras, median groups and their deformations"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized sweeps");
  app.add_option("--jobs", g.jobs, "Worker threads for verification sweeps")->check(CLI::Range(1, 256));

  AxiomsArgs ax;
  auto* axioms = app.add_subcommand("axioms", "Check the median axioms of a table");
  axioms->add_option("median", ax.median, "Median file")->required();

  std::string spec_path;
  bool spec_unchecked = false;
  auto* spec = app.add_subcommand("spec", "List primes and run the duality checks");
  spec->add_option("median", spec_path, "Median file")->required();
  spec->add_flag("--unchecked", spec_unchecked, "Skip axiom validation on load");

  FmsArgs fa;
  auto* fms = app.add_subcommand("fms", "Free median algebra on a finite base");
  fms->add_option("--base", fa.base, "Base size")->required();
  fms->add_flag("--enumerate", fa.enumerate, "List every element");
  fms->add_flag("--closure", fa.closure, "Count the majority closure of the generators");
  fms->add_option("--median", fa.median, "Median of three elements, e.g. {{a}}");
  fms->add_option("--negate", fa.negate, "Negation of a family");

  WordsArgs wa;
  auto* words = app.add_subcommand("words", "Reduced words in H * F(I')");
  words->add_option("--group", wa.group, "Group file, 'trivial' or zN");
  words->add_option("--indices", wa.indices, "Number of H-orbits |I|");
  words->add_option("--names", wa.names, "Comma-separated generator names");
  words->add_option("--radius", wa.radius, "Radius for ball");
  words->add_option("op", wa.op, "reduce | mul | inv | phi | meet | factorize | ball")->required();
  words->add_option("operands", wa.operands, "Words");

  DeformArgs da;
  auto* deform = app.add_subcommand("deform", "Deformed median group on H * F(I')");
  deform->add_option("--group", da.group, "Group file, 'trivial' or zN");
  deform->add_option("--indices", da.indices, "Number of H-orbits |I|");
  deform->add_option("--median", da.median, "Median file on X");
  deform->add_option("--names", da.names, "Comma-separated generator names");
  deform->add_flag("--unchecked", da.unchecked, "Skip axiom validation on load");
  deform->add_option("--radius", da.radius, "Ball radius for verify");
  deform->add_option("--sample", da.samples, "Extra random checks outside the ball");
  deform->add_flag("--skip-m3", da.skip_m3, "Skip the self-distributivity sweep");
  deform->add_option("op", da.op, "verify | median | cap | cell | config | enumerate")->required();
  deform->add_option("operands", da.operands, "Words");

  std::vector<std::string> zargs;
  auto* zline = app.add_subcommand("zline", "Median group operations on (Z, +)");
  zline->add_option("args", zargs, "verify N | table op a b | quotient N")->required();
  zline->allow_extras(false);
  zline->prefix_command(false);

  ClosureArgs ca;
  auto* closure = app.add_subcommand("closure", "Bounded-radius closure fragments");
  closure->add_option("mode", ca.mode, "rtc | tc")->required();
  closure->add_option("--radius", ca.radius, "Ball radius");
  closure->add_option("--depth", ca.depth, "Iteration depth for tc");
  closure->add_option("--group", ca.group, "Group file, 'trivial' or zN");
  closure->add_option("--indices", ca.indices, "Number of H-orbits |I|");
  closure->add_option("--median", ca.median, "Median file on X (default: a chain)");

  std::string fixtures_out;
  auto* fixtures = app.add_subcommand("fixtures", "List or write the bundled fixtures");
  fixtures->add_option("--out", fixtures_out, "Directory to write into");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (*axioms) {
      r = run_axioms(ax);
    } else if (*spec) {
      r = run_spec(spec_path, spec_unchecked);
    } else if (*fms) {
      r = run_fms(fa);
    } else if (*words) {
      r = run_words(wa);
    } else if (*deform) {
      r = run_deform(da, g);
    } else if (*zline) {
      r = run_zline(zargs);
    } else if (*closure) {
      r = run_closure(ca);
    } else if (*fixtures) {
      r = run_fixtures(fixtures_out);
    }
    emit(r, g);
    return r.ok ? 0 : 1;
  } catch (const mf::MalformedInput& e) {
    return fail(g, "malformed_input", e.what());
  } catch (const mf::GuardExceeded& e) {
    return fail(g, "guard_exceeded", e.what());
  } catch (const mf::DomainError& e) {
    return fail(g, "domain_error", e.what());
  } catch (const std::exception& e) {
    return fail(g, "error", e.what());
  }
}
