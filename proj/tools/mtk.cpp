// Command-line surface: parse/verify factorization files, emit van Kampen
// presentations, run group machinery, compute the Chern/index invariants.

#include "mtk/braid.hpp"
#include "mtk/dsl.hpp"
#include "mtk/fpgroup.hpp"
#include "mtk/invariants.hpp"
#include "mtk/vankampen.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mtk;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

PunctureConfig config_from_flag(const std::string& flag) {
  if (flag == "54p") return PunctureConfig::paired(27);
  if (flag.rfind("n=", 0) == 0) return PunctureConfig::plain(std::stoi(flag.substr(2)));
  if (flag.rfind("pairs=", 0) == 0)
    return PunctureConfig::paired(std::stoi(flag.substr(6)));
  throw std::runtime_error("unknown --config value: " + flag +
                           " (use 54p, n=<k> or pairs=<m>)");
}

SideConvention convention_from_flag(const std::string& flag) {
  if (flag == "below") return SideConvention::BelowPositive;
  if (flag == "above") return SideConvention::AbovePositive;
  throw std::runtime_error("unknown --side-convention value: " + flag);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string entry_of(const dsl::File& f, std::string requested) {
  if (!requested.empty()) return requested;
  if (f.factorizations.empty())
    throw std::runtime_error("file declares no factorization entry");
  return f.factorizations.front();
}

void print_degree_report_by_exponent(const DegreeReport& rep,
                                     const std::string& file, bool records,
                                     std::ostream& os) {
  std::map<int, long long> totals;
  for (const auto& g : rep.groups)
    for (const auto& [exp, count] : g.count_by_exponent) totals[exp] += count;
  for (const auto& [exp, count] : totals) {
    if (records)
      os << "file=" << file << " exp=" << exp << " count=" << count
         << " degree=" << exp * count << "\n";
    else
      os << "  exponent " << exp << ": " << count << " factors, degree "
         << exp * count << "\n";
  }
  if (records)
    os << "file=" << file << " total_stub=" << rep.stub_degree
       << " total_degree=" << rep.total_degree << "\n";
  else
    os << "  total degree " << rep.total_degree
       << (rep.stub_degree ? " (includes stub degree " +
                                 std::to_string(rep.stub_degree) + ")"
                           : std::string())
       << "\n";
}

void print_degree_report(const DegreeReport& rep, const std::string& file,
                         bool records, std::ostream& os) {
  if (records) {
    for (const auto& g : rep.groups) {
      for (const auto& [exp, count] : g.count_by_exponent)
        os << "file=" << file << " group=" << g.name << " exp=" << exp
           << " count=" << count << " degree=" << exp * count << "\n";
      if (g.stub_degree)
        os << "file=" << file << " group=" << g.name
           << " stub_degree=" << g.stub_degree << "\n";
      os << "file=" << file << " group=" << g.name
         << " composites=" << g.composite_count << " factors=" << g.factor_count
         << " degree=" << g.total_degree << "\n";
    }
    os << "file=" << file << " total_factors=" << rep.factor_count
       << " total_composites=" << rep.composite_count
       << " total_stub=" << rep.stub_degree
       << " total_degree=" << rep.total_degree << "\n";
    return;
  }
  os << file << ":\n";
  for (const auto& g : rep.groups) {
    os << "  " << g.name << ": ";
    bool first = true;
    for (const auto& [exp, count] : g.count_by_exponent) {
      if (!first) os << ", ";
      os << count << " x exp " << exp;
      first = false;
    }
    if (g.stub_degree) {
      if (!first) os << ", ";
      os << "stub degree " << g.stub_degree;
      first = false;
    }
    if (g.composite_count) os << " (" << g.composite_count << " composites)";
    os << " -> degree " << g.total_degree << "\n";
  }
  os << "  total: " << rep.factor_count << " factors";
  if (rep.composite_count) os << ", " << rep.composite_count << " composites";
  if (rep.stub_degree) os << ", stub degree " << rep.stub_degree;
  os << ", degree " << rep.total_degree << "\n";
}

std::vector<Perm> parse_images(const FpPresentation& p, const std::string& text,
                               int degree) {
  // "a:(1,2)(3,4) b:(2,3)" cycles, 1-based, comma separated points
  std::map<std::string, Perm> by_name;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("image format: name:(a b)(c d)...");
    std::string name = tok.substr(0, colon);
    std::string cyc = tok.substr(colon + 1);
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    size_t i = 0;
    while (i < cyc.size()) {
      if (cyc[i] != '(') throw std::runtime_error("bad cycle: " + cyc);
      size_t close = cyc.find(')', i);
      if (close == std::string::npos) throw std::runtime_error("bad cycle: " + cyc);
      std::istringstream cs(cyc.substr(i + 1, close - i - 1));
      std::vector<int> pts;
      std::string pt;
      while (std::getline(cs, pt, ',')) pts.push_back(std::stoi(pt) - 1);
      for (size_t k = 0; k < pts.size(); ++k)
        img[pts[k]] = pts[(k + 1) % pts.size()];
      i = close + 1;
    }
    by_name.emplace(name, Perm(img));
  }
  std::vector<Perm> out;
  for (const auto& g : p.generators) {
    auto it = by_name.find(g);
    if (it == by_name.end())
      throw std::runtime_error("no image given for generator " + g);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid monodromy factorization toolkit"};
  app.require_subcommand(1);

  std::string config_flag = "54p";
  std::string convention_flag = "below";
  std::string format_flag = "text";
  std::string entry;
  std::string grouping_flag = "group";
  app.add_option("--config", config_flag, "puncture configuration: 54p, n=<k>, pairs=<m>")
      ->capture_default_str();
  app.add_option("--grouping", grouping_flag, "degree report rows: group|exponent")
      ->capture_default_str();
  app.add_option("--side-convention", convention_flag, "below|above")
      ->capture_default_str();
  app.add_option("--format", format_flag, "text|records")->capture_default_str();
  app.add_option("--entry", entry, "factorization entry point (default: first)");

  auto* cmd_parse = app.add_subcommand("parse", "parse a factorization file and dump the AST");
  std::vector<std::string> parse_files;
  cmd_parse->add_option("file", parse_files, "input file(s)")->required();

  auto* cmd_degree = app.add_subcommand("degree", "degree bookkeeping report");
  std::vector<std::string> degree_files;
  cmd_degree->add_option("file", degree_files, "input file(s)")->required();

  auto* cmd_check = app.add_subcommand("check", "verify product equals the full twist");
  std::string check_file;
  cmd_check->add_option("file", check_file, "input file")->required();

  auto* cmd_vk = app.add_subcommand("vankampen", "emit the van Kampen presentation");
  std::string vk_file, vk_mode = "complement", vk_cusp = "braid";
  int vk_orbit = 0;
  bool vk_skip_stubs = false;
  bool vk_signed = false;
  cmd_vk->add_option("file", vk_file, "input file")->required();
  cmd_vk->add_option("--mode", vk_mode, "complement|quotient")->capture_default_str();
  cmd_vk->add_option("--cusp-form", vk_cusp, "braid|involutive")->capture_default_str();
  cmd_vk->add_option("--orbit-bound", vk_orbit, "emit rho-orbit relations up to |m|<=k")
      ->capture_default_str();
  cmd_vk->add_flag("--skip-stubs", vk_skip_stubs, "ignore stub factors");
  cmd_vk->add_flag("--signed", vk_signed, "emit signed letters (complement group form)");

  auto* cmd_group = app.add_subcommand("group", "finitely presented group machinery");
  std::string group_file, group_op, group_subgroup, group_images;
  long long coset_bound = 100000;
  int effort = 10;
  bool transpositions = false;
  cmd_group->add_option("file", group_file, "presentation file")->required();
  cmd_group->add_option("--op", group_op, "simplify|abelianize|tc|rs|hom")->required();
  cmd_group->add_option("--subgroup", group_subgroup,
                        "subgroup generator words, comma separated");
  cmd_group->add_option("--coset-bound", coset_bound, "max live cosets")
      ->capture_default_str();
  cmd_group->add_option("--effort", effort, "simplification passes")->capture_default_str();
  cmd_group->add_option("--images", group_images, "hom op: name:(cycles) list");
  cmd_group->add_flag("--transpositions", transpositions,
                      "hom op: require every image to be a transposition");

  auto* cmd_chern = app.add_subcommand("chern", "Chern numbers and index");
  std::vector<long long> chern_args;
  cmd_chern->add_option("data", chern_args, "n m d rho mu")->expected(5);

  auto* cmd_braid = app.add_subcommand("braid", "braid word arithmetic");
  std::string braid_word, braid_other;
  int braid_strands = 0;
  cmd_braid->add_option("word", braid_word, "word like \"s1 s2 s1^-1\"")->required();
  cmd_braid->add_option("-n,--strands", braid_strands, "strand count")->required();
  cmd_braid->add_option("--equals", braid_other, "second word to compare");

  CLI11_PARSE(app, argc, argv);

  try {
    SideConvention conv = convention_from_flag(convention_flag);
    bool records = format_flag == "records";

    if (*cmd_parse) {
      for (const auto& path : parse_files) {
        dsl::File f = dsl::parse_file_at(path);
        for (const auto& [name, expr] : f.bindings)
          std::cout << "let " << name << " = " << dsl::serialize(expr) << "\n";
        for (const auto& [name, deg] : f.stubs)
          std::cout << "stub " << name << " = " << deg << "\n";
        for (const auto& name : f.factorizations)
          std::cout << "factorization " << name << "\n";
      }
      return kExitPass;
    }

    if (*cmd_degree) {
      PunctureConfig config = config_from_flag(config_flag);
      long long grand = 0;
      for (const auto& path : degree_files) {
        dsl::File f = dsl::parse_file_at(path);
        Factorization fac = dsl::resolve(f, entry_of(f, entry), config, conv);
        DegreeReport rep = degree_report(fac);
        if (grouping_flag == "exponent") {
          if (!records) std::cout << path << ":\n";
          print_degree_report_by_exponent(rep, path, records, std::cout);
        } else {
          print_degree_report(rep, path, records, std::cout);
        }
        grand += rep.total_degree;
      }
      if (degree_files.size() > 1) {
        if (records)
          std::cout << "grand_total_degree=" << grand << "\n";
        else
          std::cout << "grand total degree: " << grand << "\n";
      }
      return kExitPass;
    }

    if (*cmd_check) {
      PunctureConfig config = config_from_flag(config_flag);
      dsl::File f = dsl::parse_file_at(check_file);
      Factorization fac = dsl::resolve(f, entry_of(f, entry), config, conv);
      if (fac.has_stub()) {
        std::cerr << "check refused: the factorization contains declared-degree "
                     "stub factors; only degree bookkeeping is possible\n";
        return kExitInput;
      }
      CheckResult res = check_full_twist(fac, conv);
      std::cout << (res.pass ? "PASS" : "FAIL") << ": " << res.message << "\n";
      return res.pass ? kExitPass : kExitFail;
    }

    if (*cmd_vk) {
      PunctureConfig config = config_from_flag(config_flag);
      dsl::File f = dsl::parse_file_at(vk_file);
      Factorization fac = dsl::resolve(f, entry_of(f, entry), config, conv);
      if (vk_skip_stubs) {
        Factorization g;
        g.config = fac.config;
        for (auto& x : fac.factors)
          if (!x.is_stub) g.factors.push_back(x);
        fac = std::move(g);
      }
      PresentationMode mode = vk_mode == "quotient" ? PresentationMode::Quotient
                                                    : PresentationMode::Complement;
      CuspForm form = vk_cusp == "involutive" ? CuspForm::Involutive : CuspForm::Braid;
      GPresentation p = presentation_from_factorization(fac, mode, form, conv);
      if (vk_orbit > 0)
        p.relations = invariance_orbit(p.relations, p.config, vk_orbit);
      bool display_unsigned = mode == PresentationMode::Quotient && !vk_signed;
      std::cout << presentation_text(p, display_unsigned);
      return kExitPass;
    }

    if (*cmd_group) {
      FpPresentation p = parse_presentation(read_file(group_file));
      if (group_op == "simplify") {
        std::cout << presentation_to_text(tietze_simplify(p, effort));
        return kExitPass;
      }
      if (group_op == "abelianize") {
        Abelianization a = abelianize(p);
        std::cout << "free rank " << a.free_rank;
        if (!a.torsion.empty()) {
          std::cout << ", torsion";
          for (const auto& t : a.torsion) std::cout << " Z/" << t.str();
        }
        std::cout << "\n";
        return kExitPass;
      }
      if (group_op == "tc" || group_op == "rs") {
        std::vector<std::vector<int>> sub;
        std::istringstream ws(group_subgroup);
        std::string one;
        std::map<std::string, int> gi;
        for (size_t k = 0; k < p.generators.size(); ++k)
          gi[p.generators[k]] = static_cast<int>(k) + 1;
        while (std::getline(ws, one, ',')) {
          std::istringstream ts(one);
          std::string tok;
          std::vector<int> w;
          while (ts >> tok) {
            int sign = 1;
            std::string label = tok;
            auto caret = tok.find('^');
            if (caret != std::string::npos) {
              label = tok.substr(0, caret);
              if (std::stoi(tok.substr(caret + 1)) < 0) sign = -1;
            }
            if (!gi.count(label))
              throw std::runtime_error("unknown generator in subgroup word: " + label);
            w.push_back(sign * gi[label]);
          }
          if (!w.empty()) sub.push_back(w);
        }
        TCResult res = todd_coxeter(p, sub, coset_bound);
        if (!res.completed) {
          std::cout << "overflow: coset bound " << coset_bound
                    << " hit (max live " << res.max_live << ")\n";
          return kExitFail;
        }
        std::cout << "index " << res.table.index() << "\n";
        if (group_op == "tc") {
          if (records) std::cout << res.table.records();
          return kExitPass;
        }
        FpPresentation sp = reidemeister_schreier(p, res.table);
        std::cout << presentation_to_text(tietze_simplify(sp, effort));
        return kExitPass;
      }
      if (group_op == "hom") {
        // permutation degree = largest point mentioned in the cycles
        int degree = 0;
        for (size_t i = 0; i < group_images.size(); ++i) {
          if (std::isdigit((unsigned char)group_images[i]) &&
              (i == 0 || !std::isalnum((unsigned char)group_images[i - 1]))) {
            degree = std::max(degree, std::stoi(group_images.substr(i)));
          }
        }
        std::vector<Perm> images = parse_images(p, group_images, degree);
        HomCheck hc = check_homomorphism(p, images, transpositions);
        if (hc.ok) {
          std::cout << "homomorphism: all " << p.relators.size()
                    << " relators map to identity\n";
          return kExitPass;
        }
        for (const auto& v : hc.violations) std::cout << "violation: " << v << "\n";
        return kExitFail;
      }
      throw std::runtime_error("unknown --op " + group_op);
    }

    if (*cmd_braid) {
      auto parse_braid = [&](const std::string& text) {
        ArtinWord w(braid_strands);
        std::istringstream ts(text);
        std::string tok;
        while (ts >> tok) {
          if (tok.size() < 2 || tok[0] != 's')
            throw std::runtime_error("braid letters look like s3 or s3^-1: " + tok);
          int sign = 1;
          std::string idx = tok.substr(1);
          auto caret = idx.find('^');
          if (caret != std::string::npos) {
            if (std::stoi(idx.substr(caret + 1)) != -1)
              throw std::runtime_error("only ^-1 exponents in braid words");
            sign = -1;
            idx = idx.substr(0, caret);
          }
          int i = std::stoi(idx);
          if (i < 1 || i > braid_strands - 1)
            throw std::runtime_error("generator index out of range: " + tok);
          w.letters.push_back(sign * i);
        }
        return w;
      };
      ArtinWord w = parse_braid(braid_word);
      if (!braid_other.empty()) {
        ArtinWord v = parse_braid(braid_other);
        bool nf = equals(w, v);
        bool dyn = dynnikov_equal(w, v);
        std::cout << "normal-form equal: " << (nf ? "yes" : "no")
                  << "\ndynnikov equal: " << (dyn ? "yes" : "no") << "\n";
        return nf ? kExitPass : kExitFail;
      }
      NormalForm nf = normal_form(w);
      std::cout << "degree " << degree(w) << "\n";
      std::cout << "permutation " << induced_permutation(w).cycle_string() << "\n";
      std::cout << "normal form: delta^" << nf.delta_power;
      for (const auto& f : nf.factors) std::cout << " . " << f.cycle_string();
      std::cout << "\n";
      return kExitPass;
    }

    if (*cmd_chern) {
      BranchData b{chern_args[0], chern_args[1], chern_args[2], chern_args[3],
                   chern_args[4]};
      BigInt c1 = chern_c1_sq(b);
      BigInt c2 = chern_c2(b);
      BigInt tau = index_tau(b);
      auto line = [&](const char* name, const BigInt& v) {
        std::string fac = factored_form(v, b.n);
        if (records) {
          std::cout << name << "=" << v.str();
          if (!fac.empty()) std::cout << " factored=\"" << fac << "\"";
          std::cout << "\n";
        } else {
          std::cout << name << " = ";
          if (!fac.empty()) std::cout << fac << " = ";
          std::cout << v.str() << "\n";
        }
      };
      line("C1^2", c1);
      line("C2", c2);
      line("tau", tau);
      if (!records)
        std::cout << "index is " << (tau > 0 ? "positive" : tau < 0 ? "negative" : "zero")
                  << " (mu = " << b.mu << " recorded, unused)\n";
      return kExitPass;
    }
  } catch (const dsl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NonIntegral& e) {
    std::cerr << "non-integral invariant: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitPass;
}
