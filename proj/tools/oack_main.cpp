// Command line front end. Exit codes: 0 success, 1 a verification failed,
// 2 usage error, 3 capacity guard tripped. All stdout is deterministic for a
// fixed command line; timings go to stderr only.
#include "oack/checks.hpp"
#include "oack/common.hpp"
#include "oack/expose.hpp"
#include "oack/isometry.hpp"
#include "oack/json_io.hpp"
#include "oack/norms.hpp"
#include "oack/oapoly.hpp"
#include "oack/polytope.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace oack;

// Two accepted spellings: a bare comma list 1,-1/2 or a JSON array of
// rational strings ["1","-1/2"].
std::vector<Rational> parse_entries(const std::string& text) {
  std::vector<Rational> out;
  if (!text.empty() && text.front() == '[') {
    Json parsed;
    try {
      parsed = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("bad vector literal: ") + e.what());
    }
    if (!parsed.is_array()) throw std::invalid_argument("vector literal must be an array");
    for (const auto& item : parsed) {
      if (item.is_string()) out.push_back(parse_rational(item.get<std::string>()));
      else if (item.is_number_integer()) out.push_back(Rational(item.get<long long>()));
      else throw std::invalid_argument("vector entries must be rational strings");
    }
    if (out.empty()) throw std::invalid_argument("vector literal is empty");
    return out;
  }
  std::string token;
  for (char c : text) {
    if (c == ',') {
      out.push_back(parse_rational(token));
      token.clear();
    } else if (c != ' ') {
      token += c;
    }
  }
  if (token.empty()) throw std::invalid_argument("vector literal ends with a comma or is empty");
  out.push_back(parse_rational(token));
  return out;
}

LatticeVector parse_vector(const std::string& text, Role role) {
  auto entries = parse_entries(text);
  Space space{static_cast<int>(entries.size())};
  return LatticeVector(space, role, std::move(entries));
}

std::string row_text(const LatticeVector& v) {
  std::string s;
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s;
}

std::string row_text(const Mat& m) {
  std::string s;
  for (int i = 0; i < m.n(); ++i) {
    if (i) s += ";";
    for (int j = 0; j < m.n(); ++j) {
      if (j) s += ",";
      s += to_string(m.at(i, j));
    }
  }
  return s;
}

int env_cap() {
  if (const char* raw = std::getenv("OACK_CAP")) {
    std::string text(raw);
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size() || value < 1) {
      throw std::invalid_argument("OACK_CAP must be a positive integer");
    }
    return value;
  }
  return kDefaultCap;
}

// Extreme points of the dual unit ball are single atoms or differences of two
// atoms; the target grammar mirrors that: "+t", "-t", "s-t" with 0-based
// indices.
LatticeVector parse_target(const std::string& text, int k) {
  Space space{k};
  auto index = [&](const std::string& part) {
    std::size_t used = 0;
    int value = std::stoi(part, &used);
    if (used != part.size() || value < 0 || value >= k) {
      throw std::invalid_argument("target index out of range: " + part);
    }
    return value;
  };
  if (!text.empty() && text[0] == '+') {
    return LatticeVector::unit(space, Role::measure, index(text.substr(1)));
  }
  if (!text.empty() && text[0] == '-') {
    return -LatticeVector::unit(space, Role::measure, index(text.substr(1)));
  }
  auto dash = text.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= text.size()) {
    throw std::invalid_argument("target must look like +t, -t, or s-t");
  }
  int s = index(text.substr(0, dash));
  int t = index(text.substr(dash + 1));
  if (s == t) throw std::invalid_argument("target atoms must differ");
  return LatticeVector::unit(space, Role::measure, s) - LatticeVector::unit(space, Role::measure, t);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact norms, extreme points, and isometries for diagonal polynomial lattices"};
  app.require_subcommand(1);
  bool plain = false;
  bool json_flag = false; // JSON is already the default; the flag is accepted for symmetry
  auto* plain_flag = app.add_flag("--plain", plain, "human-readable lines instead of JSON");
  app.add_flag("--json", json_flag, "emit JSON on stdout (the default)")->excludes(plain_flag);
  int cap = kDefaultCap;
  try {
    cap = env_cap();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--cap", cap, "enumeration capacity guard (env OACK_CAP)");
  int rc = 0;

  auto* norm_cmd = app.add_subcommand("norm", "evaluate one of the four norms");
  norm_cmd->fallthrough();
  std::string norm_id_text, norm_vec_text;
  norm_cmd->add_option("id,--norm", norm_id_text, "sup | d | var | zero")->required();
  norm_cmd->add_option("vector,--vec", norm_vec_text, "rationals: 1,-1/2 or [\"1\",\"-1/2\"]")
      ->required();
  norm_cmd->callback([&] {
    NormId id = parse_norm_id(norm_id_text);
    Role role = (id == NormId::sup || id == NormId::d) ? Role::function : Role::measure;
    Rational value = norm_value(id, parse_vector(norm_vec_text, role));
    if (plain) std::cout << to_string(value) << "\n";
    else std::cout << to_json(value).dump() << "\n";
  });

  auto* poly_cmd = app.add_subcommand("poly-norm", "norms of a diagonal polynomial");
  poly_cmd->fallthrough();
  int poly_degree = 0;
  std::string poly_mu_text;
  std::string poly_which = "both";
  bool poly_oracle = false;
  poly_cmd->add_option("-n,--degree", poly_degree, "homogeneity degree")->required();
  poly_cmd->add_option("mu,--mu", poly_mu_text, "coefficient measure")->required();
  poly_cmd->add_option("--which", poly_which, "sup | reg | both")
      ->check(CLI::IsMember({"sup", "reg", "both"}));
  poly_cmd->add_flag("--oracle", poly_oracle, "cross check the sup norm by full enumeration");
  poly_cmd->callback([&] {
    OAPoly p(poly_degree, parse_vector(poly_mu_text, Role::measure));
    Rational sup = sup_norm_poly(p);
    Rational reg = reg_norm_poly(p);
    bool mismatch = false;
    Rational scanned;
    if (poly_oracle) {
      scanned = sup_norm_bruteforce(p, cap);
      mismatch = scanned != sup;
    }
    if (plain) {
      if (poly_which != "reg") std::cout << "sup " << to_string(sup) << "\n";
      if (poly_which != "sup") std::cout << "reg " << to_string(reg) << "\n";
      if (poly_oracle) std::cout << "oracle " << to_string(scanned) << "\n";
    } else if (poly_which == "sup") {
      std::cout << to_json(sup).dump() << "\n";
    } else if (poly_which == "reg") {
      std::cout << to_json(reg).dump() << "\n";
    } else {
      Json out;
      out["sup"] = to_string(sup);
      out["reg"] = to_string(reg);
      if (poly_oracle) out["oracle"] = to_string(scanned);
      std::cout << out.dump() << "\n";
    }
    if (mismatch) rc = 1;
  });

  auto* basic_cmd = app.add_subcommand("check-basic", "absolute value against its local bound");
  basic_cmd->fallthrough();
  int basic_degree = 0;
  std::string basic_mu_text, basic_x_text;
  basic_cmd->add_option("-n,--degree", basic_degree, "homogeneity degree")->required();
  basic_cmd->add_option("mu,--mu", basic_mu_text, "coefficient measure")->required();
  basic_cmd->add_option("x,--x", basic_x_text, "nonnegative evaluation point")->required();
  basic_cmd->callback([&] {
    OAPoly p(basic_degree, parse_vector(basic_mu_text, Role::measure));
    BasicReport r = check_basic(p, parse_vector(basic_x_text, Role::function));
    if (!plain) {
      std::cout << to_json(r).dump() << "\n";
    } else {
      std::cout << "abs " << to_string(r.abs_value) << "\n";
      std::cout << "local " << to_string(r.local_bound) << "\n";
      if (r.ratio) std::cout << "ratio " << to_string(*r.ratio) << "\n";
      std::cout << "parity " << (r.even ? "even" : "odd") << "\n";
    }
  });

  auto* vert_cmd = app.add_subcommand("vertices", "extreme points of a unit ball");
  vert_cmd->fallthrough();
  std::string vert_id_text;
  int vert_k = 0;
  bool vert_check = false;
  vert_cmd->add_option("id,--norm", vert_id_text, "sup | d | var | zero")->required();
  vert_cmd->add_option("-k,--k", vert_k, "dimension")->required();
  vert_cmd->add_flag("--check", vert_check, "compare enumeration with the closed form");
  vert_cmd->callback([&] {
    NormId id = parse_norm_id(vert_id_text);
    VRep enumerated = enumerate_vertices(ball_hrep(id, vert_k, cap), cap);
    bool matches = true;
    if (vert_check) matches = enumerated.vertices == predicted_extremes(id, vert_k).vertices;
    if (!plain) {
      if (vert_check) {
        Json out;
        out["matches_prediction"] = matches;
        out["vertices"] = to_json(enumerated);
        std::cout << out.dump() << "\n";
      } else {
        std::cout << to_json(enumerated).dump() << "\n";
      }
    } else {
      for (const auto& v : enumerated.vertices) std::cout << row_text(v) << "\n";
      if (vert_check) std::cout << (matches ? "check ok" : "check mismatch") << "\n";
    }
    if (vert_check && !matches) rc = 1;
  });

  auto* iso_cmd = app.add_subcommand("isometries", "lattice isometry group of a unit ball");
  iso_cmd->fallthrough();
  std::string iso_id_text = "d";
  int iso_k = 0;
  bool iso_classify = false;
  iso_cmd->add_option("id,--norm", iso_id_text, "sup | d | var | zero (default d)");
  iso_cmd->add_option("-k,--k", iso_k, "dimension")->required();
  iso_cmd->add_flag("--classify", iso_classify, "structural form of each map (d ball only)");
  iso_cmd->callback([&] {
    NormId id = parse_norm_id(iso_id_text);
    if (iso_classify && id != NormId::d) {
      throw std::invalid_argument("--classify applies to the d ball only");
    }
    auto maps = enumerate_isometries(id, iso_k, cap);
    if (!plain) {
      Json out;
      out["count"] = maps.size();
      Json list = Json::array();
      for (const auto& m : maps) {
        if (iso_classify) list.push_back(to_json(classify(m)));
        else list.push_back(to_json(m));
      }
      out["maps"] = std::move(list);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "count " << maps.size() << "\n";
      for (const auto& m : maps) {
        std::cout << row_text(m);
        if (iso_classify) {
          IsometryReport r = classify(m);
          std::cout << (r.kind == IsoKind::canonical ? " canonical" : " noncanonical");
          std::cout << " sign=" << r.sign;
          if (r.kind == IsoKind::noncanonical) std::cout << " p=" << r.p << " t=" << r.t;
        }
        std::cout << "\n";
      }
    }
  });

  auto* smooth_cmd = app.add_subcommand("smooth", "smoothness of a unit vector");
  smooth_cmd->fallthrough();
  std::string smooth_vec_text;
  smooth_cmd->add_option("x,--vec", smooth_vec_text, "unit vector in the d norm")->required();
  smooth_cmd->callback([&] {
    LatticeVector x = parse_vector(smooth_vec_text, Role::function);
    NormingFace face = norming_face(x);
    Smoothness g = is_gateaux(x);
    Smoothness f = is_frechet(x);
    if (!plain) {
      Json out;
      out["gateaux"] = g.smooth;
      out["frechet"] = f.smooth;
      out["derivative"] = g.derivative ? to_json(*g.derivative) : Json(nullptr);
      out["face_size"] = face.extremes.size();
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "gateaux " << (g.smooth ? "yes" : "no") << "\n";
      std::cout << "frechet " << (f.smooth ? "yes" : "no") << "\n";
      std::cout << "derivative " << (g.derivative ? row_text(*g.derivative) : std::string("none"))
                << "\n";
      std::cout << "face " << face.extremes.size() << "\n";
    }
  });

  auto* expose_cmd = app.add_subcommand("expose", "strongly exposing witness for an extreme point");
  expose_cmd->fallthrough();
  std::string expose_target;
  int expose_k = 0;
  expose_cmd->add_option("--target", expose_target, "+t, -t, or s-t (0-based atoms)")->required();
  expose_cmd->add_option("-k,--k", expose_k, "dimension")->required();
  expose_cmd->callback([&] {
    LatticeVector extreme = parse_target(expose_target, expose_k);
    LatticeVector witness = exposing_witness(extreme);
    bool plain_ok = exposes(witness, extreme);
    bool strong_ok = strongly_exposes(witness, extreme);
    if (!plain) {
      Json out;
      out["extreme"] = to_json(extreme);
      out["witness"] = to_json(witness);
      out["exposes"] = plain_ok;
      out["strongly"] = strong_ok;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "extreme " << row_text(extreme) << "\n";
      std::cout << "witness " << row_text(witness) << "\n";
      std::cout << "exposes " << (plain_ok ? "yes" : "no") << "\n";
      std::cout << "strongly " << (strong_ok ? "yes" : "no") << "\n";
    }
    if (!plain_ok || !strong_ok) rc = 1;
  });

  auto* check_cmd = app.add_subcommand("check", "run the property suites");
  check_cmd->fallthrough();
  std::string check_suite = "all";
  CheckOptions opts;
  check_cmd->add_option("--suite", check_suite, "suite name or 'all'");
  check_cmd->add_option("--seed", opts.seed, "RNG seed");
  check_cmd->add_option("--k-max", opts.k_max, "largest dimension (0 = suite default)");
  check_cmd->add_option("--n-max", opts.n_max, "largest degree (0 = suite default)");
  check_cmd->add_option("--trials", opts.trials, "random cases per suite (0 = suite default)");
  check_cmd->callback([&] {
    opts.cap = cap;
    auto reports = run_suites(check_suite, opts);
    Json out = Json::array();
    bool all_ok = true;
    for (const auto& r : reports) {
      std::cerr << "# " << r.suite << " " << r.micros << " us\n";
      all_ok = all_ok && r.ok();
      if (!plain) {
        out.push_back(to_json(r));
        continue;
      }
      std::cout << r.suite << ": " << r.cases << " cases, ";
      if (r.ok()) {
        std::cout << "ok\n";
      } else {
        std::cout << r.failures.size() << " failures\n";
        for (const auto& f : r.failures) {
          std::cout << "  fail: " << f.where << " expected=" << f.expected
                    << " actual=" << f.actual << "\n";
        }
      }
    }
    if (!plain) std::cout << out.dump() << "\n";
    if (!all_ok) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
