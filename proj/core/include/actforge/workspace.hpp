#ifndef ACTFORGE_WORKSPACE_HPP
#define ACTFORGE_WORKSPACE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "actforge/presentation.hpp"
#include "actforge/wreath.hpp"

namespace actforge {

// How an entry was built: an operation name plus argument references
// (entry names or integer literals).
struct Recipe {
  std::string op;
  std::vector<std::string> args;
};

struct MonoidEntry {
  MonoidPtr monoid;
  std::optional<Recipe> recipe;
};

struct ActEntry {
  std::string monoid_name;
  FiniteAct act;
  std::optional<Recipe> recipe;
};

struct GenSetEntry {
  std::string act_name;
  std::vector<Elem> elems;
  bool minimal_certified = false;
  std::optional<Recipe> recipe;
};

// Verification verdict embedded in an emitted presentation.
struct VerificationRecord {
  std::string act_name;
  std::vector<Elem> assign;
  bool verified = false;
  std::string failure;            // empty when verified
  std::vector<Elem> witness;      // [gen, elem, gen, elem] for kernel gaps
};

struct PresentationEntry {
  std::string monoid_name;
  ActPresentation pres;
  std::optional<VerificationRecord> verification;
  std::optional<Recipe> recipe;
};

// A named collection of monoids, acts, generating sets and presentations.
// Loading re-validates every table, re-executes recipes against the stored
// tables, recomputes stored verification verdicts, and rejects dangling or
// cyclic references.
class Workspace {
 public:
  Workspace() = default;

  static Workspace load(const std::string& path);
  static Workspace from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
  void save(const std::string& path) const;

  const std::map<std::string, MonoidEntry>& monoids() const {
    return monoids_;
  }
  const std::map<std::string, ActEntry>& acts() const { return acts_; }
  const std::map<std::string, GenSetEntry>& gensets() const {
    return gensets_;
  }
  const std::map<std::string, PresentationEntry>& presentations() const {
    return presentations_;
  }

  const MonoidPtr& monoid(const std::string& name) const;
  const FiniteAct& act(const std::string& name) const;
  const GenSetEntry& genset(const std::string& name) const;
  const PresentationEntry& presentation(const std::string& name) const;

  void add_monoid(const std::string& name, MonoidPtr m,
                  std::optional<Recipe> recipe = std::nullopt);
  void add_act(const std::string& name, const std::string& monoid_name,
               FiniteAct a, std::optional<Recipe> recipe = std::nullopt);
  void add_genset(const std::string& name, GenSetEntry entry);
  void add_presentation(const std::string& name, PresentationEntry entry);

  // Re-runs a recipe against the current entries (used on load and by the
  // CLI construct verb).
  MonoidPtr run_monoid_recipe(const Recipe& r) const;
  FiniteAct run_act_recipe(const Recipe& r) const;

 private:
  void validate_all() const;

  std::map<std::string, MonoidEntry> monoids_;
  std::map<std::string, ActEntry> acts_;
  std::map<std::string, GenSetEntry> gensets_;
  std::map<std::string, PresentationEntry> presentations_;
};

// JSON codecs for the pieces shared with certificate files.
nlohmann::json free_elem_to_json(const FreeActElem& w);
FreeActElem free_elem_from_json(const nlohmann::json& j);

nlohmann::json derivation_to_json(const FreeActElem& lhs,
                                  const FreeActElem& rhs,
                                  const DerivationCertificate& cert);
struct DerivationDocument {
  FreeActElem lhs, rhs;
  DerivationCertificate cert;
};
DerivationDocument derivation_from_json(const nlohmann::json& j);

nlohmann::json connectedness_to_json(Elem a, const NAMap& theta,
                                     const NAMap& phi,
                                     std::span<const NAMap> u,
                                     const ConnectednessCertificate& cert);
struct ConnectednessDocument {
  Elem a = 0;
  NAMap theta, phi;
  std::vector<NAMap> u;
  ConnectednessCertificate cert;
};
ConnectednessDocument connectedness_from_json(const nlohmann::json& j);

}  // namespace actforge

#endif  // ACTFORGE_WORKSPACE_HPP
