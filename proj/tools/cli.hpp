#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superplactic/superplactic.hpp"

namespace superplactic::cli {

enum Exit : int { ok = 0, predicate_false = 1, input_error = 2, resource_error = 3, invariant_error = 4 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline AlphabetPtr load_alphabet(const std::string& path) { return parse_alphabet(read_file(path), path); }

inline SkewTableau load_tableau(const std::string& path, const AlphabetPtr& a) { return parse_tableau(read_file(path), a, path); }

/// Recording tableaux default to labels 1..m, m the number of filled cells.
inline SkewTableau load_recording(const std::string& path, const std::string& alphabet_path) {
  const std::string text = read_file(path);
  if (!alphabet_path.empty()) return parse_tableau(text, load_alphabet(alphabet_path), path);
  std::istringstream in(text);
  std::string token;
  int m = 0;
  while (in >> token) {
    if (token.front() == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (token != "." && token != "-") ++m;
  }
  return parse_tableau(text, label_alphabet(m), path);
}

/// "i,j i,j ..." as a list of cells.
inline std::vector<Cell> parse_cells(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  std::vector<Cell> out;
  while (in >> token) {
    const auto comma = token.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("");
      std::size_t used = 0;
      const int row = std::stoi(token.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("");
      const auto col_text = token.substr(comma + 1);
      const int col = std::stoi(col_text, &used);
      if (used != col_text.size()) throw std::invalid_argument("");
      out.push_back({row, col});
    } catch (const std::logic_error&) {
      throw InputError("bad cell '" + token + "', expected i,j");
    }
  }
  return out;
}

inline std::string format_opposite_header(const SignedAlphabet& a) {
  std::string out = "# opposite alphabet:";
  for (const auto& e : a.entries()) out += " " + e.symbol + ":" + (e.parity == Parity::odd ? "1" : "0");
  return out + "\n";
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError(path + ": cannot write file");
}

/// Runs one command line. Output goes to `out`, diagnostics to `err`; the
/// return value is the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Super plactic monoid toolkit: super tableaux, jeu de taquin, growth diagrams, LR coefficients"};
  app.name("superplactic");
  app.require_subcommand(1);

  std::string alphabet_path;
  std::function<int()> action;

  auto add = [&](const std::string& name, const std::string& about) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("-a,--alphabet", alphabet_path, "SIGMA alphabet file")->required()->check(CLI::ExistingFile);
    return sub;
  };

  // validate
  std::string tbl;
  auto* validate = add("validate", "check a TBL tableau and print it in normal form");
  validate->add_option("tableau", tbl, "TBL file")->required();
  validate->callback([&] {
    action = [&] {
      const auto t = load_tableau(tbl, load_alphabet(alphabet_path));
      out << "# shape " << format_skew_shape(t.shape()) << "\n" << format_tableau(t);
      return ok;
    };
  });

  // build
  std::string word_text;
  bool left = false;
  auto* build = add("build", "insertion tableau C(w) of a word");
  build->add_option("-w,--word", word_text, "whitespace-separated letters")->required();
  build->add_flag("--left", left, "insert right to left by column insertion");
  build->callback([&] {
    action = [&] {
      const auto w = parse_word(load_alphabet(alphabet_path), word_text);
      out << format_tableau(left ? tableau_of_word_left(w) : tableau_of_word(w));
      return ok;
    };
  });

  // insert
  auto* insert = add("insert", "insert letters into a tableau (t -> w, or x_k <- ... <- x_1 <- t with --left)");
  insert->add_option("tableau", tbl, "TBL file")->required();
  insert->add_option("-w,--word", word_text, "letters to insert, in order")->required();
  insert->add_flag("--left", left, "column (left) insertion");
  insert->callback([&] {
    action = [&] {
      const auto a = load_alphabet(alphabet_path);
      Tableau t = load_tableau(tbl, a);
      const auto w = parse_word(a, word_text);
      for (Letter x : w.letters()) t = left ? insert_left(x, t) : insert_right(t, x);
      out << format_tableau(t);
      return ok;
    };
  });

  // equiv
  std::string other_text;
  bool bfs = false;
  std::size_t max_class = default_max_class_size;
  auto* equiv = add("equiv", "super plactic equivalence of two words");
  equiv->add_option("first", word_text, "word")->required();
  equiv->add_option("second", other_text, "word")->required();
  equiv->add_flag("--bfs", bfs, "decide by exploring the relations instead of insertion");
  equiv->add_option("--max-class", max_class, "class-size bound for --bfs")->capture_default_str();
  equiv->callback([&] {
    action = [&] {
      const auto a = load_alphabet(alphabet_path);
      const auto w = parse_word(a, word_text);
      const auto v = parse_word(a, other_text);
      const bool same = bfs ? equivalent_bfs(w, v, max_class) : equivalent(w, v);
      out << (same ? "true" : "false") << "\n";
      return same ? ok : predicate_false;
    };
  });

  // greene
  auto* greene = add("greene", "Greene invariants l_k and column invariants of a word");
  greene->add_option("-w,--word", word_text, "word (at most 10 letters)")->required();
  greene->callback([&] {
    action = [&] {
      const auto w = parse_word(load_alphabet(alphabet_path), word_text);
      out << "row:";
      for (int k = 1; k <= static_cast<int>(w.size()); ++k) out << " " << greene_row(w, k);
      out << "\ncol:";
      for (int k = 1; k <= static_cast<int>(w.size()); ++k) out << " " << greene_col(w, k);
      out << "\nshape: " << format_partition(shape_from_greene(w)) << "\n";
      return ok;
    };
  });

  // rectify
  bool trace = false;
  std::string corners;
  auto* rect = add("rectify", "rectify a skew tableau by jeu de taquin");
  rect->add_option("tableau", tbl, "TBL file")->required();
  rect->add_flag("--trace", trace, "print one JSON line per slide before the result");
  rect->add_option("--corners", corners, "inner corners to use, in order: \"i,j i,j ...\"");
  rect->callback([&] {
    action = [&] {
      const auto s = load_tableau(tbl, load_alphabet(alphabet_path));
      const auto policy = corners.empty() ? bottom_corner_policy() : sequence_corner_policy(parse_cells(corners));
      const auto r = rectify_traced(s, policy);
      if (trace) out << format_trace(r.slides);
      out << format_tableau(r.tableau);
      return ok;
    };
  });

  // evacuate
  std::string opposite_path;
  bool congruence = false;
  auto* evac = add("evacuate", "evacuation t -> t^op over the opposite alphabet");
  evac->add_option("tableau", tbl, "TBL file")->required();
  evac->add_option("--opposite-alphabet", opposite_path, "also write the opposite alphabet to this SIGMA file");
  evac->add_flag("--congruence", congruence, "compute C(read_row(t)*) instead of sliding");
  evac->callback([&] {
    action = [&] {
      const auto a = load_alphabet(alphabet_path);
      const auto t = load_tableau(tbl, a);
      const auto opp = opposite(*a);
      const auto r = congruence ? opposite_via_congruence(t, opp) : evacuate(t, opp);
      if (!opposite_path.empty()) write_file(opposite_path, format_alphabet(*opp));
      out << format_opposite_header(*opp) << format_tableau(r);
      return ok;
    };
  });

  // product
  std::string tbl2;
  auto* prod = add("product", "insertion product of two (skew) tableaux");
  prod->add_option("first", tbl, "TBL file")->required();
  prod->add_option("second", tbl2, "TBL file")->required();
  prod->callback([&] {
    action = [&] {
      const auto a = load_alphabet(alphabet_path);
      out << format_tableau(skew_product(load_tableau(tbl, a), load_tableau(tbl2, a)));
      return ok;
    };
  });

  // growth
  std::string recording_path;
  std::string recording_alphabet;
  auto* growth = add("growth", "growth diagram of (R, S) with Rec(S) and R'");
  growth->add_option("-r,--recording", recording_path, "TBL file of R, straight shape equal to the inner shape of S")->required();
  growth->add_option("--recording-alphabet", recording_alphabet, "SIGMA file for R (default: labels 1..m)");
  growth->add_option("tableau", tbl, "TBL file of S")->required();
  growth->callback([&] {
    action = [&] {
      const auto s = load_tableau(tbl, load_alphabet(alphabet_path));
      const auto r = load_recording(recording_path, recording_alphabet);
      out << format_diagram(growth_diagram(r, s));
      const auto g = grw(r, s);
      out << "\n# rectified\n" << format_tableau(g.rectified) << "\n# recording\n" << format_tableau(g.recording);
      return ok;
    };
  });

  // dualeq
  auto* dualeq = add("dualeq", "dual equivalence of two skew tableaux of the same shape");
  dualeq->add_option("first", tbl, "TBL file")->required();
  dualeq->add_option("second", tbl2, "TBL file")->required();
  dualeq->callback([&] {
    action = [&] {
      const auto a = load_alphabet(alphabet_path);
      const bool same = dual_equivalent(load_tableau(tbl, a), load_tableau(tbl2, a));
      out << (same ? "true" : "false") << "\n";
      return same ? ok : predicate_false;
    };
  });

  // psi
  auto* psi_cmd = add("psi", "the skew tableau dual equivalent to S that rectifies to T");
  psi_cmd->add_option("skew", tbl, "TBL file of S")->required();
  psi_cmd->add_option("target", tbl2, "TBL file of T")->required();
  psi_cmd->callback([&] {
    action = [&] {
      const auto a = load_alphabet(alphabet_path);
      out << format_tableau(psi(load_tableau(tbl, a), load_tableau(tbl2, a)));
      return ok;
    };
  });

  // lr
  std::string shape_text;
  bool json = false;
  LrBudget budget;
  auto* lr = add("lr", "Littlewood-Richardson coefficients c^nu of a skew shape");
  lr->add_option("-s,--shape", shape_text, "skew shape, e.g. 3,2,1/2,1")->required();
  lr->add_flag("--json", json, "JSON report");
  lr->add_option("--max-boxes", budget.max_boxes, "budget on |lambda|")->capture_default_str();
  lr->add_option("--max-alphabet", budget.max_alphabet, "budget on the alphabet size")->capture_default_str();
  lr->callback([&] {
    action = [&] {
      const auto shape = parse_skew_shape(shape_text);
      const auto report = verify_lr_identity(shape.outer(), shape.inner(), load_alphabet(alphabet_path), budget);
      out << (json ? lr_report_json(report) : format_lr_report(report));
      return ok;
    };
  });

  // schur-check
  auto* schur = add("schur-check", "check S_{lambda/mu} = sum c^nu S_nu, as tableau sums and as polynomials");
  schur->add_option("-s,--shape", shape_text, "skew shape")->required();
  schur->add_option("--max-boxes", budget.max_boxes, "budget on |lambda|")->capture_default_str();
  schur->add_option("--max-alphabet", budget.max_alphabet, "budget on the alphabet size")->capture_default_str();
  schur->callback([&] {
    action = [&] {
      const auto a = load_alphabet(alphabet_path);
      const auto shape = parse_skew_shape(shape_text);
      const auto report = verify_lr_identity(shape.outer(), shape.inner(), a, budget);
      const auto lhs = schur_sum(shape, a, budget);
      TableauSum rhs(a);
      for (const auto& term : report.terms) {
        const auto straight = schur_sum(SkewShape(term.nu), a, budget);
        for (const auto& [t, c] : straight.terms()) rhs.add(t, c * term.coefficient);
      }
      const bool same = lhs == rhs && sum_to_polynomial(lhs) == sum_to_polynomial(rhs);
      long long total = 0;
      for (const auto& term : report.terms) total += term.coefficient * term.tableaux;
      out << "skew tableaux: " << report.skew_tableaux << "\nsum c*#T: " << total << "\n" << (same ? "true" : "false") << "\n";
      return same ? ok : predicate_false;
    };
  });

  // enumerate
  bool count_only = false;
  auto* enumerate = add("enumerate", "all tableaux of a (skew) shape, separated by blank lines");
  enumerate->add_option("-s,--shape", shape_text, "shape, e.g. 2,1 or 3,2/1")->required();
  enumerate->add_flag("--count", count_only, "print only the number of tableaux");
  enumerate->callback([&] {
    action = [&] {
      const auto a = load_alphabet(alphabet_path);
      const auto shape = parse_skew_shape(shape_text);
      if (count_only) {
        out << count_tableaux(shape, a) << "\n";
        return ok;
      }
      bool first = true;
      for_each_tableau(shape, a, [&](const SkewTableau& t) {
        if (!first) out << "\n";
        first = false;
        out << format_tableau(t);
      });
      return ok;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return resource_error;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return invariant_error;
  }
}

}  // namespace superplactic::cli
