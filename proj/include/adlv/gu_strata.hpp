#pragma once

// Ekedahl-Oort strata of the supersingular locus for GU(2, n-2) at an
// inert prime: the elements w_{k,l}, their classification, and the
// fibration data attached to each stratum.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adlv/refset.hpp"
#include "adlv/weyl.hpp"

namespace adlv {

struct StratumLabel
{
  int k = 1;
  int l = 2;

  auto operator<=>(StratumLabel const &) const = default;
};

std::string to_string(StratumLabel const &label); // "w_{k,l}"

enum class StratumClass
{
  DL,
  NotDL,
  Empty,
};

/// "dl", "not_dl", "empty"
std::string to_string(StratumClass c);
StratumClass class_from_string(std::string const &s);

struct StratumRecord
{
  StratumLabel label;
  StratumClass cls = StratumClass::Empty;
  int length = 0;
  std::optional<int> dim;
  std::optional<StratumLabel> target;
  std::optional<int> rank;
  std::optional<StratumLabel> base;
  RefSet supp_sigma;
  RefSet s_w_sigma;
  RefSet parahoric;
  bool positive_coxeter = false;
  std::optional<RefSet> j_set;

  bool operator==(StratumRecord const &) const = default;
};

/// Throws LabelOutOfRange unless 1 <= k < l <= n.
void check_label(int n, int k, int l);

/// mu = ((0, ..., 0, -1, -1), -1)
Cocharacter mu(int n);
/// Identity window with similitude -1.
WeylElement b(int n);
/// tau = w_{1,2}
WeylElement tau(int n);
/// s_{[a,c]} = s_a s_{a-1} ... s_c if a >= c, identity otherwise.
WeylElement s_range(int n, int a, int c);
/// t_i = s_i s_{n-i}
WeylElement t(int n, int i);
/// w_{k,l} = phi^mu s_{[n-2,k]} s_{[n-1,l]}
WeylElement w_kl(int n, int k, int l);

std::set<StratumLabel> s_admissible(int n);
/// Minimal coset representatives below some phi^{u mu}, found by
/// enumerating subwords. Refuses n > 7.
std::set<StratumLabel> brute_force_s_adm(int n);

StratumClass classify(int n, int k, int l);
/// The same classification from supp_sigma and is_empty_basic.
StratumClass classify_by_criterion(int n, int k, int l);

// The following three throw NotApplicable unless the label is NotDL.
StratumLabel w_prime(int n, int k, int l);
int fibration_rank(int n, int k, int l);
StratumLabel fibration_base(int n, int k, int l);

RefSet supp_sigma_closed(int n, int k, int l);
/// S(w_{k,l}, sigma); throws NotApplicable on Empty labels.
RefSet s_closed(int n, int k, int l);
/// Letters used by the reduction w_{k,l} -> w'_{k,l}; NotDL only.
RefSet j_set(int n, int k, int l);

/// supp_sigma and S(w, sigma) of the stratum, shifted by one. NotDL labels
/// use their fibration base. Throws NotApplicable on Empty labels.
RefSet parahoric_type(int n, int k, int l);
/// b^{-1} tau_1 w_{k,l} sigma(tau_1)^{-1}
WeylElement w0_element(int n, int k, int l);

int dim_stratum(int n, int k, int l);
int dim_X(int n);
int irr_orbit_count(int n);
std::set<StratumLabel> top_strata(int n);

/// Componentwise order: a <= b iff a.k <= b.k and a.l <= b.l.
bool closure_leq(StratumLabel const &a, StratumLabel const &b);
/// w >= u^{-1} w2 sigma(u) for some u in W_0. Refuses n > 7.
bool geq_s_sigma(WeylElement const &w, WeylElement const &w2);

/// Throws NotApplicable unless the label is NotDL.
bool positive_coxeter_closed(int n, int k, int l);

StratumRecord make_record(int n, int k, int l);

struct StratumEdge
{
  StratumLabel from;
  StratumLabel to;

  auto operator<=>(StratumEdge const &) const = default;
};

struct StratumGraph
{
  int n = 0;
  std::vector<StratumRecord> nodes; ///< nonempty labels, sorted
  std::vector<StratumEdge> edges;   ///< sorted
};

/// Records for all labels, including empty ones, in label order.
std::vector<StratumRecord> all_records(int n);
StratumGraph stratum_graph(int n);

} // namespace adlv
