#include "seplat/commands.hpp"

#include <chrono>
#include <sstream>

#include "seplat/axioms.hpp"
#include "seplat/coproduct.hpp"
#include "seplat/space_file.hpp"

namespace seplat {

using nlohmann::ordered_json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::ok: return "ok";
    case CheckStatus::violated: return "violated";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

bool CheckReport::any_violated() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::violated) return true;
  return false;
}

int verdict(bool violated, const CommandOptions& opts) {
  if (opts.expect_violations) return violated ? kExitOk : kExitViolation;
  return violated ? kExitViolation : kExitOk;
}

std::string render_text(const CheckReport& r) {
  std::ostringstream os;
  os << "subject: " << r.subject << " (" << r.kind << ")\n";
  if (r.states) os << "states: " << r.states << "\n";
  os << "elements: " << r.elements << "\n";
  os << "atoms: " << r.atoms << "\n";
  if (r.families) os << "families: " << r.families->render() << "\n";
  if (r.superselected_pairs)
    os << "superselected atom pairs: " << *r.superselected_pairs << " (" << r.superselected_nonorthogonal.value_or(0)
       << " non-orthogonal)\n";
  for (const auto& c : r.checks) {
    os << c.name << ": " << to_string(c.status);
    if (c.status == CheckStatus::violated) os << " (" << c.witness_count << (c.witness_count == 1 ? " witness)" : " witnesses)");
    if (!c.detail.empty()) os << " - " << c.detail;
    os << "\n";
    for (const auto& w : c.witnesses) os << "  witness " << w << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (r.seconds) os << "seconds: " << *r.seconds << "\n";
  return os.str();
}

ordered_json to_json(const CheckReport& r) {
  ordered_json j;
  j["subject"] = r.subject;
  j["kind"] = r.kind;
  j["states"] = r.states;
  j["elements"] = r.elements;
  j["atoms"] = r.atoms;
  if (r.families) {
    ordered_json f;
    for (std::size_t k = 0; k < r.families->counts.size(); ++k) f[to_string(static_cast<Family>(k))] = r.families->counts[k];
    j["families"] = f;
  }
  if (r.superselected_pairs) {
    j["superselection"] = {{"pairs", *r.superselected_pairs},
                           {"non_orthogonal", r.superselected_nonorthogonal.value_or(0)}};
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["witness_count"] = c.witness_count;
    e["witnesses"] = c.witnesses;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["notes"] = r.notes;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string render_witness(const Witness& w) {
  std::string idx = "[";
  for (std::size_t k = 0; k < w.elements.size(); ++k) idx += (k ? "," : "") + std::to_string(w.elements[k]);
  return idx + "] " + w.narrative;
}

CheckEntry entry(std::string name, const CheckResult& r) {
  CheckEntry e;
  e.name = std::move(name);
  e.status = r ? CheckStatus::violated : CheckStatus::ok;
  if (r) {
    e.witness_count = 1;
    e.witnesses.push_back(render_witness(*r));
  }
  return e;
}

constexpr std::size_t kListedSasakiWitnesses = 3;

CheckEntry sasaki_entry(const PropertyLattice& l, const SasakiReport& s) {
  CheckEntry e;
  e.name = "sasaki";
  e.status = s.regular ? CheckStatus::ok : CheckStatus::violated;
  e.witness_count = s.witnesses.size();
  for (std::size_t k = 0; k < s.witnesses.size() && k < kListedSasakiWitnesses; ++k)
    e.witnesses.push_back(render_witness(to_witness(l, s.witnesses[k])));
  return e;
}

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {kExitUsage, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const CapExceeded& e) {
    return {kExitCap, "", std::string("cap exceeded: ") + e.what() + "\n"};
  } catch (const InvalidSpace& e) {
    return {kExitUsage, "", std::string("invalid space: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

struct SpaceSubject {
  std::string name;
  std::string kind;
  OrthoSpace space;
  std::optional<SeparatedProduct> separated;
};

SpaceSubject resolve_space(const SpaceFile& f) {
  const auto& d = f.subject();
  if (d.kind == DefinitionKind::coproduct) throw InvalidSpace("'" + d.name + "' is a coproduct; use the coproduct command");
  SpaceSubject s{d.name, "space", build_space(f, d.name), std::nullopt};
  if (d.kind == DefinitionKind::product) {
    s.kind = "product";
    auto left = build_space(f, d.left);
    auto right = build_space(f, d.right);
    if (is_antipodal(left) && is_antipodal(right)) {
      s.separated.emplace(std::move(left), std::move(right));
      s.kind = "separated product";
    }
  }
  return s;
}

CoproductLattice resolve_coproduct(const SpaceFile& f, std::size_t cap) {
  const auto& d = f.subject();
  if (d.kind != DefinitionKind::coproduct) throw InvalidSpace("'" + d.name + "' is not a coproduct definition");
  return CoproductLattice(std::make_shared<const PropertyLattice>(PropertyLattice::from_space(build_space(f, d.left), cap)),
                          std::make_shared<const PropertyLattice>(PropertyLattice::from_space(build_space(f, d.right), cap)));
}

void add_separated_facts(CheckReport& r, const SpaceSubject& s, const PropertyLattice& l) {
  const auto& sp = *s.separated;
  FamilyHistogram h;
  std::size_t unclassified = 0;
  std::size_t pairs = 0;
  std::size_t crossed = 0;
  std::size_t uncrossed = 0;
  for (Element a = 0; a < l.size(); ++a) {
    const auto c = sp.classify(l.set(a));
    if (!c) {
      ++unclassified;
      continue;
    }
    ++h[family(*c)];
    if (const auto* p = std::get_if<sep::Pair>(&*c)) {
      ++pairs;
      const auto& truth = l.set(l.ortho(a));
      if (sp.denote(sp.perp(*c)) == truth) ++crossed;
      if (sp.uncrossed_pair_perp(*p) == truth) ++uncrossed;
    }
  }
  r.families = h;
  if (unclassified) r.notes.push_back(std::to_string(unclassified) + " closed sets fall outside the families");
  r.notes.push_back("pair orthocomplement {(p1,p2),(q1,q2)}' = {(p1*,q2*),(q1*,p2*)} holds for " + std::to_string(crossed) +
                    "/" + std::to_string(pairs) + " pairs; the uncrossed form {(p1*,q2*),(q1*,q2*)} holds for " +
                    std::to_string(uncrossed) + "/" + std::to_string(pairs));
  if (sp.classical()) r.notes.push_back("a component has a single antipodal pair (classical, trivial orthogonality)");
}

CheckReport space_report(const SpaceSubject& s, const PropertyLattice& l) {
  CheckReport r;
  r.subject = s.name;
  r.kind = s.kind;
  r.states = s.space.size();
  r.elements = l.size();
  r.atoms = l.atoms().size();
  const auto sel = superselection_pairs(l);
  r.superselected_pairs = sel.size();
  std::size_t nonorth = 0;
  for (const auto& p : sel) nonorth += p.orthogonal ? 0 : 1;
  r.superselected_nonorthogonal = nonorth;
  if (s.separated) add_separated_facts(r, s, l);
  return r;
}

CheckReport coproduct_report(const std::string& name, const CoproductLattice& c) {
  const auto cr = coproduct_checks(c);
  CheckReport r;
  r.subject = name;
  r.kind = "coproduct";
  r.elements = cr.elements;
  r.atoms = cr.atoms;
  r.checks.push_back(entry("ortholattice", cr.ortho_laws));
  r.checks.push_back(entry("orthomodularity", cr.orthomodular));
  r.checks.push_back(entry("covering", cr.covering));
  r.checks.push_back(entry("exchange", cr.exchange));
  r.checks.push_back(entry("atomistic", cr.atomistic));
  CheckEntry s;
  s.name = "sasaki";
  s.status = cr.sasaki.regular ? CheckStatus::ok : CheckStatus::violated;
  s.witness_count = cr.sasaki.witnesses.size();
  for (std::size_t k = 0; k < cr.sasaki.witnesses.size() && k < kListedSasakiWitnesses; ++k) {
    const auto& w = cr.sasaki.witnesses[k];
    s.witnesses.push_back("[" + std::to_string(w.a) + "," + std::to_string(w.atom) + "] phi_a(p) with a=" + c.label(w.a) +
                          ", p=" + c.label(w.atom) + " is " + c.label(w.image) + ", not an atom");
  }
  r.checks.push_back(s);
  r.notes.push_back("orthocomplement is componentwise; a pair whose componentwise complement has a zero component maps to 0");
  return r;
}

CommandResult emit(const CheckReport& r, const CommandOptions& opts, int code) {
  CommandResult out;
  out.exit_code = code;
  out.out = opts.json ? to_json(r).dump(2) + "\n" : render_text(r);
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

CommandResult cmd_check(std::string_view text, const CommandOptions& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const auto file = parse_space_file(text);
    CheckReport r;
    if (file.subject().kind == DefinitionKind::coproduct) {
      r = coproduct_report(file.subject().name, resolve_coproduct(file, opts.cap));
    } else {
      const auto s = resolve_space(file);
      const auto l = PropertyLattice::from_space(s.space, opts.cap);
      r = space_report(s, l);
      r.checks.push_back(entry("orthomodularity", check_orthomodular(l)));
      r.checks.push_back(entry("covering", check_covering(l)));
      r.checks.push_back(entry("exchange", check_exchange(l)));
      r.checks.push_back(entry("atomistic", check_atomistic(l)));
      r.checks.push_back(sasaki_entry(l, check_sasaki_regular(l)));
    }
    if (opts.timing) r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return emit(r, opts, verdict(r.any_violated(), opts));
  });
}

CommandResult cmd_sasaki(std::string_view text, const CommandOptions& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const auto file = parse_space_file(text);
    CheckReport r;
    if (file.subject().kind == DefinitionKind::coproduct) {
      auto full = coproduct_report(file.subject().name, resolve_coproduct(file, opts.cap));
      r = full;
      r.checks.clear();
      for (auto& c : full.checks)
        if (c.name == "sasaki") r.checks.push_back(c);
    } else {
      const auto s = resolve_space(file);
      const auto l = PropertyLattice::from_space(s.space, opts.cap);
      r = space_report(s, l);
      const auto rep = check_sasaki_regular(l);
      auto e = sasaki_entry(l, rep);
      e.witnesses.clear();
      for (const auto& w : rep.witnesses) e.witnesses.push_back(render_witness(to_witness(l, w)));
      r.checks.push_back(e);
    }
    if (opts.timing) r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return emit(r, opts, verdict(r.any_violated(), opts));
  });
}

CommandResult cmd_coproduct(std::string_view text, const CommandOptions& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const auto file = parse_space_file(text);
    auto r = coproduct_report(file.subject().name, resolve_coproduct(file, opts.cap));
    if (opts.timing) r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return emit(r, opts, verdict(r.any_violated(), opts));
  });
}

CommandResult cmd_lattice(std::string_view text, const CommandOptions& opts) {
  return guarded([&] {
    const auto file = parse_space_file(text);
    std::vector<std::pair<std::string, bool>> listing;
    CheckReport r;
    if (file.subject().kind == DefinitionKind::coproduct) {
      const auto c = resolve_coproduct(file, opts.cap);
      r.subject = file.subject().name;
      r.kind = "coproduct";
      r.elements = c.size();
      r.atoms = c.atoms().size();
      for (Element a = 0; a < c.size(); ++a) listing.emplace_back(c.label(a), c.is_atom(a));
    } else {
      const auto s = resolve_space(file);
      const auto l = PropertyLattice::from_space(s.space, opts.cap);
      r = space_report(s, l);
      for (Element a = 0; a < l.size(); ++a) listing.emplace_back(l.label(a), l.is_atom(a));
    }
    CommandResult out;
    if (opts.json) {
      auto j = to_json(r);
      j.erase("checks");
      ordered_json els = ordered_json::array();
      for (std::size_t k = 0; k < listing.size(); ++k)
        els.push_back({{"index", k}, {"set", listing[k].first}, {"atom", listing[k].second}});
      j["listing"] = els;
      out.out = j.dump(2) + "\n";
    } else {
      out.out = render_text(r);
      for (std::size_t k = 0; k < listing.size(); ++k)
        out.out += std::to_string(k) + " " + listing[k].first + (listing[k].second ? " atom" : "") + "\n";
    }
    return out;
  });
}

CommandResult cmd_hasse(std::string_view text, const CommandOptions& opts) {
  return guarded([&] {
    const auto file = parse_space_file(text);
    std::vector<std::string> labels;
    std::vector<std::pair<Element, Element>> edges;
    if (file.subject().kind == DefinitionKind::coproduct) {
      const auto c = resolve_coproduct(file, opts.cap);
      for (Element a = 0; a < c.size(); ++a) labels.push_back(c.label(a));
      for (Element a = 0; a < c.size(); ++a)
        for (Element b = 0; b < c.size(); ++b)
          if (c.covers(a, b)) edges.emplace_back(a, b);
    } else {
      const auto l = PropertyLattice::from_space(build_space(file, file.subject().name), opts.cap);
      for (Element a = 0; a < l.size(); ++a) labels.push_back(l.label(a));
      for (Element a = 0; a < l.size(); ++a)
        for (Element b : l.upper_covers(a)) edges.emplace_back(a, b);
    }
    std::ostringstream os;
    os << "digraph " << dot_quote(file.subject().name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < labels.size(); ++k) os << "  n" << k << " [label=" << dot_quote(labels[k]) << "];\n";
    for (const auto& [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return CommandResult{kExitOk, os.str(), ""};
  });
}

CommandResult cmd_oracle(std::size_t m, std::size_t n, const CommandOptions& opts) {
  if (m < 1 || n < 1 || m > kMaxOracleComponent || n > kMaxOracleComponent)
    return {kExitUsage, "",
            "oracle: component sizes must lie in 1.." + std::to_string(kMaxOracleComponent) + "\n"};
  return guarded([&] {
    const auto start = Clock::now();
    const auto r = oracle_equivalence(m, n, opts.cap);
    const std::string subject = "MO(" + std::to_string(m) + ") x MO(" + std::to_string(n) + ")";
    const std::string pair_note = "pair orthocomplement: crossed form matches " +
                                  std::to_string(r.pair_perp_crossed_matches) + "/" +
                                  std::to_string(r.pair_perp_instances) + ", uncrossed form matches " +
                                  std::to_string(r.pair_perp_uncrossed_matches) + "/" +
                                  std::to_string(r.pair_perp_instances);
    CommandResult out;
    out.exit_code = r.ok ? kExitOk : kExitViolation;
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (opts.json) {
      ordered_json j;
      j["subject"] = subject;
      j["agree"] = r.ok;
      j["brute_elements"] = r.brute_elements;
      j["symbolic_elements"] = r.symbolic_elements;
      ordered_json f;
      for (std::size_t k = 0; k < r.histogram.counts.size(); ++k) f[to_string(static_cast<Family>(k))] = r.histogram.counts[k];
      j["families"] = f;
      j["checks"] = {{"perp", r.perp_checks}, {"meet", r.meet_checks}, {"join", r.join_checks}, {"sasaki", r.sasaki_checks}};
      j["pair_perp"] = {{"instances", r.pair_perp_instances},
                        {"crossed_matches", r.pair_perp_crossed_matches},
                        {"uncrossed_matches", r.pair_perp_uncrossed_matches}};
      if (!r.ok) j["counterexample"] = r.counterexample;
      if (opts.timing) j["seconds"] = secs;
      out.out = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "oracle " << subject << ": " << (r.ok ? "agree" : "DISAGREE") << "\n";
      os << "elements: brute force " << r.brute_elements << ", symbolic " << r.symbolic_elements << "\n";
      os << "families: " << r.histogram.render() << "\n";
      os << "checked: perp " << r.perp_checks << ", meet " << r.meet_checks << ", join " << r.join_checks << ", sasaki "
         << r.sasaki_checks << "\n";
      os << "note: " << pair_note << "\n";
      if (!r.ok) os << "counterexample: " << r.counterexample << "\n";
      if (opts.timing) os << "seconds: " << secs << "\n";
      out.out = os.str();
    }
    return out;
  });
}

CommandResult cmd_sasaki_random(std::uint64_t seed, std::size_t trials, std::size_t max_states,
                                const CommandOptions& opts) {
  if (max_states < 2) return {kExitUsage, "", "sasaki: --max-states must be at least 2\n"};
  return guarded([&] {
    const auto start = Clock::now();
    const auto results = product_regularity_trials(seed, trials, max_states, opts.cap);
    std::size_t irregular = 0;
    for (const auto& t : results) irregular += t.product_regular ? 0 : 1;
    const bool all_irregular = irregular == results.size();
    CommandResult out;
    out.exit_code = all_irregular ? kExitOk : kExitViolation;
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (opts.json) {
      ordered_json j;
      j["seed"] = seed;
      j["trials"] = results.size();
      j["irregular_products"] = irregular;
      ordered_json arr = ordered_json::array();
      for (const auto& t : results)
        arr.push_back({{"first_states", t.first.size()},
                       {"second_states", t.second.size()},
                       {"product_elements", t.product_elements},
                       {"regular", t.product_regular}});
      j["runs"] = arr;
      if (opts.timing) j["seconds"] = secs;
      out.out = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "seed " << seed << ": " << irregular << "/" << results.size()
         << " products of Sasaki-regular T1 nontrivial spaces are irregular\n";
      for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& t = results[k];
        os << k << ": " << t.first.size() << " x " << t.second.size() << " states, " << t.product_elements
           << " elements, " << (t.product_regular ? "regular" : "irregular") << "\n";
      }
      if (opts.timing) os << "seconds: " << secs << "\n";
      out.out = os.str();
    }
    return out;
  });
}

}  // namespace seplat
