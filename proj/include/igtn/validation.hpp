// Self-validation suites.  Each suite checks one family of properties
// exhaustively or on seeded random samples and counts violations; the
// acceptance test binary and `igtn selftest` both run these.

#ifndef IGTN_VALIDATION_HPP_
#define IGTN_VALIDATION_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

namespace igtn {

  enum class SuiteLevel { quick, full };

  struct SuiteConfig {
    SuiteLevel    level   = SuiteLevel::full;
    std::uint64_t seed    = 20240917;
    unsigned      threads = 0;
  };

  struct SuiteReport {
    int         id = 0;
    std::string name;
    std::size_t checked    = 0;
    std::size_t violations = 0;
    //! Extra findings, e.g. the Unsupported rate.
    std::string detail;
    double      seconds = 0;
    //! Set when the sample size reached the level's threshold.
    bool threshold_met = true;

    [[nodiscard]] bool passed() const noexcept {
      return violations == 0 && threshold_met && checked > 0;
    }
  };

  //! Oracle vertex groups equal AHom or the trivial group; n ∈ {4, 5}.
  SuiteReport check_vertex_groups(SuiteConfig const& cfg);
  //! |closure of the generators| equals the order formula; n <= 6.
  SuiteReport check_ahom_orders(SuiteConfig const& cfg);
  //! Components are the stationary singletons and pair-type classes.
  SuiteReport check_components(SuiteConfig const& cfg);
  //! Every edge satisfies both label equations and is a homeomorphism.
  SuiteReport check_edge_labels(SuiteConfig const& cfg);
  //! Principal-factor products agree with composition in T_n.
  SuiteReport check_rees_products(SuiteConfig const& cfg);
  //! Non-regular vertices next to rank n - 1 are stationary and isolated.
  SuiteReport check_degenerate_rank(SuiteConfig const& cfg);
  //! Rewrite invariance and soundness of the word problem.
  SuiteReport check_word_problem(SuiteConfig const& cfg);
  //! ({1},x,x)θ is normal in (G_1,x,x)θ with quotient order dividing m_1!.
  SuiteReport check_schutzenberger(SuiteConfig const& cfg);

  //! All eight in order.
  std::vector<SuiteReport> run_all_suites(SuiteConfig const& cfg);

}  // namespace igtn

#endif  // IGTN_VALIDATION_HPP_
