#include "twistlab/cli.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "twistlab/conuclei.hpp"
#include "twistlab/dot.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/fixtures.hpp"
#include "twistlab/json_io.hpp"
#include "twistlab/representation.hpp"
#include "twistlab/search.hpp"
#include "twistlab/twist.hpp"
#include "twistlab/varieties.hpp"

namespace twistlab::cli {

  namespace {

    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    Algebra load(std::string const& spec) {
      std::string const prefix = "fixture:";
      if (spec.rfind(prefix, 0) == 0) {
        auto A = fixtures::find(spec.substr(prefix.size()));
        if (!A) {
          throw UsageError("unknown fixture " + spec.substr(prefix.size()));
        }
        return *A;
      }
      return algebra_from_json(read_json_file(spec));
    }

    Elem parse_elem(Algebra const& A, std::string const& s) {
      for (Elem x = 0; x < A.size(); ++x) {
        if (A.element_name(x) == s) {
          return x;
        }
      }
      if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
        auto const v = std::stoul(s);
        if (v < A.size()) {
          return static_cast<Elem>(v);
        }
      }
      throw UsageError("no element '" + s + "' in " + A.name());
    }

    UnaryMap parse_tau(Algebra const& A, std::string const& spec) {
      if (spec == "identity") {
        return identity_map(A);
      }
      if (spec == "term:nelson") {
        return nelson_term_tau(A);
      }
      if (spec == "term:kalman") {
        return kalman_term_tau(A);
      }
      return map_from_json(read_json_file(spec), A);
    }

    std::string elems(Algebra const& A, std::vector<Elem> const& xs) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? ", " : "") + (xs[i] < A.size() ? A.element_name(xs[i]) : std::to_string(xs[i]));
      }
      return s;
    }

    // PASS/FAIL line plus up to `cap` witnesses.
    void report(std::ostream& out, Algebra const& A, Verdict const& v, std::size_t cap = 10) {
      out << v.name << ": " << (v.holds() ? "PASS" : "FAIL") << "\n";
      for (std::size_t i = 0; i < v.witnesses.size() && i < cap; ++i) {
        auto const& w = v.witnesses[i];
        out << "  " << w.axiom;
        if (!w.elements.empty()) {
          out << " at (" << elems(A, w.elements) << ")";
        }
        out << "\n";
      }
      if (v.witnesses.size() > cap) {
        out << "  ... " << v.witnesses.size() - cap << " more\n";
      }
    }

    void emit(std::ostream& out, std::string const& path, std::string const& text) {
      if (path.empty()) {
        out << text;
      } else {
        write_text_file(path, text);
      }
    }

    std::string table_line(Algebra const& A, Algebra const& B, Morphism const& m) {
      std::string s;
      for (Elem x = 0; x < A.size(); ++x) {
        s += (x ? " " : "") + A.element_name(x) + "->" + B.element_name(m(x));
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // verbs
    ////////////////////////////////////////////////////////////////////////

    int do_check(std::string const& input, std::vector<std::string> const& varieties,
                 std::string const& tau, std::ostream& out) {
      RawAlgebra raw;
      if (input.rfind("fixture:", 0) == 0) {
        raw = load(input).to_raw();
      } else {
        raw = raw_from_json(read_json_file(input));
      }
      ValidationReport const rep = validate(raw);
      if (!rep.holds()) {
        out << "validation: FAIL\n";
        for (auto const& w : rep.witnesses) {
          out << "  " << w.axiom << " at (";
          for (std::size_t i = 0; i < w.elements.size(); ++i) {
            out << (i ? ", " : "") << w.elements[i];
          }
          out << ")\n";
        }
        return 1;
      }
      Algebra const A = Algebra::certify(raw);
      if (varieties.empty()) {
        out << "validation: PASS\n";
        out << "size: " << A.size() << "\n";
        out << "profile:";
        for (auto const& f : structural_profile(A).flags()) {
          out << " " << f;
        }
        out << "\n";
        return 0;
      }
      bool all = true;
      for (auto const& v : varieties) {
        if (v == "inca") {
          if (tau.empty()) {
            throw UsageError("--variety inca needs --tau");
          }
          NCAPair const P = NCAPair::make(A, parse_tau(A, tau));
          Verdict const r = inca_check(P);
          report(out, A, r);
          all = all && r.holds();
          continue;
        }
        Verdict const r = check_variety(A, v);
        report(out, A, r);
        all = all && r.holds();
      }
      return all ? 0 : 1;
    }

    struct TwistOpts {
      std::string input;
      std::string iota;
      std::string filter;
      bool        brouwerian = false;
      bool        inca       = false;
      bool        full       = false;
      bool        dot        = false;
      std::string output;
      std::string tau_out;
    };

    int do_twist(TwistOpts const& o, std::ostream& out) {
      Algebra const L = load(o.input);
      if (o.full) {
        TwistAlgebra const T = full_twist(L);
        emit(out, o.output, o.dot ? hasse_dot(T.algebra()) : pretty(to_json(T.algebra())));
        return 0;
      }
      if (o.iota.empty()) {
        throw UsageError("--iota is required unless --full is given");
      }
      Elem const                  i = parse_elem(L, o.iota);
      std::optional<TwistAlgebra> T;
      if (!o.filter.empty()) {
        Subset const F = subset_from_json(read_json_file(o.filter), L);
        if (o.brouwerian == o.inca) {
          throw UsageError("--filter needs exactly one of --brouwerian and --inca");
        }
        T = o.brouwerian ? sendlewski_twist(L, i, F) : inca_twist(L, i, F);
      } else {
        T = twist(L, i);
      }
      Algebra const& A = T->algebra();
      std::optional<UnaryMap> t;
      if (is_cyclic_element(L, i)) {
        t = tau_tw(*T);
      }
      if (!o.tau_out.empty()) {
        if (!t) {
          throw PreconditionError("tau_Tw needs a cyclic iota");
        }
        write_text_file(o.tau_out, pretty(to_json(*t)));
      }
      if (o.dot) {
        DotStyle style;
        if (o.filter.empty()) {
          style.maximal = maximal_set(L, i);
        }
        if (t) {
          Subset img(A.name(), A.size());
          for (Elem x = 0; x < A.size(); ++x) {
            if ((*t)(x) == x) {
              img.insert(x);
            }
          }
          style.image = img;
        }
        emit(out, o.output, hasse_dot(A, style));
      } else {
        emit(out, o.output, pretty(to_json(A)));
      }
      return 0;
    }

    int do_conucleus(std::string const& mode, std::string const& input, std::string const& tau,
                     std::size_t bound, std::string const& output, std::ostream& out) {
      Algebra const A = load(input);
      if (mode == "enumerate") {
        auto const all = enumerate_nelson_conuclei(A, bound);
        json       arr = json::array();
        for (auto const& m : all) {
          arr.push_back(m.table);
        }
        emit(out, output, json{{"parent", A.name()}, {"conuclei", arr}}.dump() + "\n");
        return 0;
      }
      if (tau.empty()) {
        throw UsageError("--tau is required");
      }
      UnaryMap const t = parse_tau(A, tau);
      if (mode == "check") {
        Verdict const w = is_weak_conucleus(A, t);
        Verdict const c = is_conucleus(A, t);
        report(out, A, w);
        report(out, A, c);
        bool ok = c.holds();
        if (A.involutive()) {
          Verdict const n = is_nelson_conucleus(A, t);
          report(out, A, n);
          ok = ok && n.holds();
        }
        return ok ? 0 : 1;
      }
      ImageAlgebra const img = conucleus_image(A, t);
      json               j   = to_json(img.algebra);
      j["embedding"]         = img.embedding;
      emit(out, output, pretty(j));
      return 0;
    }

    int do_represent(std::string const& input, std::string const& tau, std::string const& log,
                     std::ostream& out) {
      Algebra const A = load(input);
      if (tau.empty()) {
        throw UsageError("--tau is required");
      }
      NCAPair const       P   = NCAPair::make(A, parse_tau(A, tau));
      ImageAlgebra const& img = P.image();
      Algebra const&      H   = img.algebra;
      json                proof;
      bool                all = true;
      auto line = [&](std::string const& key, bool pass, std::string const& detail) {
        out << key << ": " << (pass ? "PASS" : "FAIL");
        if (!detail.empty()) {
          out << " (" << detail << ")";
        }
        out << "\n";
        all = all && pass;
      };
      out << "algebra: " << A.name() << " (" << A.size() << " elements)\n";
      out << "image: " << H.size() << " elements:";
      for (Elem a = 0; a < H.size(); ++a) {
        out << " " << H.element_name(a);
      }
      out << "\n";
      out << "iota: " << A.element_name(P.iota()) << "\n";

      Phi const f = phi(P);
      out << "phi: " << table_line(A, f.target.algebra(), f.map) << "\n";
      line("thm:representation", true,
           f.surjective ? "isomorphism onto " + f.target.algebra().name()
                        : "embedding into " + f.target.algebra().name() + ", not onto");
      for (Elem x = 0; x < A.size(); ++x) {
        proof["phi"].push_back(
            json{{"x", A.element_name(x)}, {"image", f.target.algebra().element_name(f.map(x))}});
      }
      Verdict const adj = adjunction_identities(P);
      line("thm:adjunction", adj.holds(), "");

      RasiowaStructure const R   = rasiowa_structure(P);
      RasiowaRecovery const  rec = rasiowa_to_nca(R);
      line("thm:rasiowa", rec.round_trip,
           std::to_string(rec.quotient.classes.size()) + " theta-classes");

      if (is_nt(A).holds() && P.tau() == nelson_term_tau(A)) {
        Sendlewski const s = sendlewski_isomorphism(A);
        out << "filter:";
        for (Elem a : s.filter.elements()) {
          out << " " << H.element_name(a);
        }
        out << "\n";
        line("thm:sendlewski", true, "onto " + s.target.algebra().name());
        for (auto const& w : s.witnesses) {
          proof["sendlewski"].push_back(json{{"pair", pair_name(H, {w.a, w.b})},
                                             {"w", A.element_name(w.w)},
                                             {"z", A.element_name(w.z)}});
        }
      }
      if (A.has_bottom() && structural_profile(A).commutative) {
        Verdict const it1 = inca_check(P);
        if (it1.holds()) {
          Inca const c = inca_isomorphism(P);
          out << "inca filter:";
          for (Elem a : c.filter.elements()) {
            out << " " << c.base.element_name(a);
          }
          out << "\n";
          line("thm:inca", true, "onto " + c.target.algebra().name());
          for (auto const& w : c.witnesses) {
            proof["inca"].push_back(json{{"pair", pair_name(c.base, {w.a, w.b})},
                                         {"w", A.element_name(w.w)},
                                         {"z", A.element_name(w.z)}});
          }
        } else {
          out << "inca: IT1 fails at "
              << A.element_name(it1.first("IT1")->elements.at(0)) << "\n";
        }
      }
      if (!log.empty()) {
        write_text_file(log, proof.dump(2) + "\n");
      }
      return all ? 0 : 1;
    }

    struct EnumOpts {
      SearchSpec  spec;
      std::size_t limit      = 0;
      bool        count_only = false;
      bool        all_labels = false;
      std::string output;
    };

    int do_enumerate(EnumOpts o, std::ostream& out) {
      if (o.limit > 0) {
        o.spec.limit = o.limit;
      }
      o.spec.canonical_only = !o.all_labels;
      std::ostringstream body;
      std::size_t const  count = enumerate_residuated_lattices(o.spec, [&](Algebra const& A) {
        if (!o.count_only) {
          body << to_json(A).dump() << "\n";
        }
        return true;
      });
      if (o.count_only) {
        body << count << "\n";
      }
      emit(out, o.output, body.str());
      return 0;
    }

    int do_morphisms(std::string const& a, std::string const& b, std::string const& kind,
                     std::string const& sig, std::ostream& out) {
      Algebra const A = load(a);
      Algebra const B = load(b);
      MorphismKind  k = MorphismKind::hom;
      if (kind == "embed") {
        k = MorphismKind::embed;
      } else if (kind == "iso") {
        k = MorphismKind::iso;
      } else if (kind != "hom") {
        throw UsageError("--kind must be hom, embed or iso");
      }
      Signature s;
      try {
        s = Signature::parse(sig);
      } catch (PreconditionError const& e) {
        throw UsageError(e.what());
      }
      auto const found = find_homomorphisms(A, B, s, k);
      out << found.size() << " " << kind << "(" << A.name() << ", " << B.name() << ")\n";
      for (auto const& m : found) {
        out << table_line(A, B, m) << "\n";
      }
      return 0;
    }

    int do_subalgebras(std::string const& a, std::string const& sig, std::ostream& out) {
      Algebra const A = load(a);
      Signature     s;
      try {
        s = Signature::parse(sig);
      } catch (PreconditionError const& e) {
        throw UsageError(e.what());
      }
      auto const subs = subalgebras(A, s);
      out << subs.size() << " subuniverses of " << A.name() << "\n";
      for (auto const& S : subs) {
        out << "{" << elems(A, S.elements()) << "}\n";
      }
      return 0;
    }

    int do_export(std::string const& input, std::string const& format, std::string const& dir,
                  std::string const& output, std::ostream& out) {
      if (!dir.empty()) {
        for (auto const& f : fixtures::corpus()) {
          write_text_file(dir + "/" + f.name + ".json", pretty(to_json(f.algebra)));
        }
        out << "wrote " << fixtures::corpus().size() << " fixtures to " << dir << "\n";
        return 0;
      }
      if (input.empty()) {
        throw UsageError("export needs an algebra or --fixtures DIR");
      }
      Algebra const A = load(input);
      if (format == "dot") {
        emit(out, output, hasse_dot(A));
      } else if (format == "json") {
        emit(out, output, pretty(to_json(A)));
      } else {
        throw UsageError("--format must be json or dot");
      }
      return 0;
    }

    int do_suite(std::ostream& out) {
      auto const lines = paper_suite();
      bool       all   = true;
      std::size_t width = 0;
      for (auto const& l : lines) {
        width = std::max(width, l.key.size());
      }
      for (auto const& l : lines) {
        out << l.key << std::string(width + 2 - l.key.size(), ' ') << (l.pass ? "PASS" : "FAIL");
        if (!l.detail.empty()) {
          out << "  " << l.detail;
        }
        out << "\n";
        all = all && l.pass;
      }
      return all ? 0 : 1;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation with finite residuated lattices and twist structures",
                 "twistlab"};
    app.require_subcommand(1);

    std::string              input, input2, tau, output, kind = "hom", sig = "rl";
    std::vector<std::string> varieties;
    auto* check = app.add_subcommand("check", "Validate an algebra and test variety membership");
    check->add_option("algebra", input, "algebra JSON or fixture:NAME")->required();
    check->add_option("--variety", varieties,
                      "kalman, nelson, npc, nt, nt0, brouwerian or inca (repeatable)");
    check->add_option("--tau", tau, "conucleus for inca: JSON, identity, term:nelson, term:kalman");

    TwistOpts topt;
    auto*     tw = app.add_subcommand("twist", "Build Tw(L,i), a filtered twist or the full twist");
    tw->add_option("algebra", topt.input)->required();
    tw->add_option("--iota", topt.iota, "element name or index");
    tw->add_option("--filter", topt.filter, "subset JSON");
    tw->add_flag("--brouwerian", topt.brouwerian, "Tw(H,i,F) over a Brouwerian algebra");
    tw->add_flag("--inca", topt.inca, "Tw(L,i,F) over a commutative involutive algebra");
    tw->add_flag("--full", topt.full, "the full twist L x L");
    tw->add_flag("--dot", topt.dot, "Hasse diagram instead of JSON");
    tw->add_option("-o,--output", topt.output);
    tw->add_option("--tau-out", topt.tau_out, "write tau_Tw as a map JSON");

    std::string mode;
    std::size_t bound = 12;
    auto*       cn    = app.add_subcommand("conucleus", "Check, image or enumerate conuclei");
    cn->add_option("mode", mode, "check, image or enumerate")
        ->required()
        ->check(CLI::IsMember({"check", "image", "enumerate"}));
    cn->add_option("algebra", input)->required();
    cn->add_option("--tau", tau);
    cn->add_option("--bound", bound, "size bound for enumeration");
    cn->add_option("-o,--output", output);

    std::string log;
    auto*       rep = app.add_subcommand("represent", "Run the representation theorems on (A, tau)");
    rep->add_option("algebra", input)->required();
    rep->add_option("--tau", tau, "JSON, identity, term:nelson or term:kalman")->required();
    rep->add_option("--emit-proof-log", log, "write every checked instance as JSON");

    EnumOpts eo;
    auto*    en = app.add_subcommand("enumerate", "Residuated lattices up to isomorphism");
    en->add_option("--size", eo.spec.size)->required();
    en->add_flag("--commutative", eo.spec.commutative);
    en->add_flag("--integral", eo.spec.integral);
    en->add_flag("--involutive", eo.spec.involutive);
    en->add_flag("--distributive", eo.spec.distributive);
    en->add_flag("--bounded", eo.spec.bounded);
    en->add_flag("--idempotent", eo.spec.idempotent);
    en->add_flag("--odd", eo.spec.odd);
    en->add_flag("--count-only", eo.count_only);
    en->add_flag("--all-labellings", eo.all_labels, "skip isomorphism rejection");
    en->add_option("--limit", eo.limit);
    en->add_option("--skip", eo.spec.skip, "resume after this many results");
    en->add_option("--bound", eo.spec.bound);
    en->add_option("--threads", eo.spec.threads);
    en->add_option("-o,--output", eo.output);

    auto* mo = app.add_subcommand("morphisms", "Homomorphisms, embeddings or isomorphisms A -> B");
    mo->add_option("source", input)->required();
    mo->add_option("target", input2)->required();
    mo->add_option("--kind", kind, "hom, embed or iso");
    mo->add_option("--signature", sig, "preset or comma list");

    auto* sb = app.add_subcommand("subalgebras", "Subuniverses closed under a signature");
    sb->add_option("algebra", input)->required();
    sb->add_option("--signature", sig, "preset or comma list");

    auto* ps = app.add_subcommand("paper-suite", "Every verifier over the fixture corpus");

    std::string format = "json", dir;
    auto*       ex     = app.add_subcommand("export", "Write an algebra as JSON or DOT");
    ex->add_option("algebra", input);
    ex->add_option("--format", format, "json or dot");
    ex->add_option("--fixtures", dir, "write the whole fixture corpus into DIR");
    ex->add_option("-o,--output", output);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << e.what() << "\n";
      return 2;
    }

    try {
      if (check->parsed()) {
        return do_check(input, varieties, tau, out);
      }
      if (tw->parsed()) {
        return do_twist(topt, out);
      }
      if (cn->parsed()) {
        return do_conucleus(mode, input, tau, bound, output, out);
      }
      if (rep->parsed()) {
        return do_represent(input, tau, log, out);
      }
      if (en->parsed()) {
        return do_enumerate(eo, out);
      }
      if (mo->parsed()) {
        return do_morphisms(input, input2, kind, sig, out);
      }
      if (sb->parsed()) {
        return do_subalgebras(input, sig, out);
      }
      if (ps->parsed()) {
        return do_suite(out);
      }
      if (ex->parsed()) {
        return do_export(input, format, dir, output, out);
      }
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (MalformedInput const& e) {
      err << "malformed input: " << e.what() << "\n";
      return 2;
    } catch (ValidationError const& e) {
      err << "invalid algebra: " << e.what() << "\n";
      return 1;
    } catch (PreconditionError const& e) {
      out << "FAIL (precondition: " << e.what() << ")\n";
      return 1;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << "\n";
      return 1;
    }
    return 2;
  }

}  // namespace twistlab::cli
