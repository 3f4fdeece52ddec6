// Words over E(T_n) read as elements of the free idempotent-generated
// semigroup IG(E_{T_n}).
//
// A word is first cut into its minimal r-factorisation x = x_1 ... x_k,
// where each x_s is a regular element and no two neighbours multiply to a
// regular element.  The ranks of the factors (the D-fingerprint) are an
// invariant.  Two words of the same fingerprint are compared by
// propagating cosets through the vertex groups of the contact graphs at the
// junctions (the map θ).
//
// Group coordinates are only modelled up to rank n - 2.  Words with a
// factor of rank n - 1 are still factorised, and are decided whenever a
// structural argument suffices; otherwise the verdict is Unsupported.

#ifndef IGTN_IG_WORDS_HPP_
#define IGTN_IG_WORDS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "contact_graph.hpp"
#include "permgroups.hpp"
#include "permutation.hpp"
#include "transformations.hpp"

namespace igtn {

  //! An empty letter list stands for the identity element.
  struct IgWord {
    int                     n = 0;
    std::vector<Idempotent> letters;

    //! Throws SizeMismatch if a letter is over a different n.
    static IgWord make(int n, std::vector<Idempotent> letters);

    [[nodiscard]] bool is_identity() const noexcept {
      return letters.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return letters.size();
    }

    bool operator==(IgWord const&) const = default;
    auto operator<=>(IgWord const&) const = default;
  };

  //! Drops identity letters.
  IgWord normalize(IgWord const& w);

  //! The image of w under IG(E) -> T_n.
  Transformation evaluate(IgWord const& w);

  //! Whether a product of a regular element with image A and one with
  //! kernel P' is regular again: |A| >= |P'| and A saturates P', or
  //! |A| <= |P'| and P' separates A.
  bool product_is_regular(Subset const& A, SetPartition const& P2);

  //! The product t1 t2 when it is regular, nullopt otherwise.  Throws
  //! Unsupported if the product has rank above n - 2.
  std::optional<RegularTriple> regular_product(RegularTriple const& t1,
                                               RegularTriple const& t2);

  struct Factor {
    //! Letters [begin, end) of the normalised word.
    std::size_t    begin = 0;
    std::size_t    end   = 0;
    Transformation value;
    //! Rees coordinates, or nullopt when the rank is above n - 2.
    std::optional<RegularTriple> triple;

    [[nodiscard]] int rank() const {
      return value.rank();
    }
    [[nodiscard]] SetPartition kernel() const {
      return value.kernel();
    }
    [[nodiscard]] Subset image() const {
      return value.image();
    }
    [[nodiscard]] bool supported() const noexcept {
      return triple.has_value();
    }
  };

  struct Fingerprint {
    std::vector<int> ranks;

    bool operator==(Fingerprint const&) const = default;
  };

  struct RFactorisation {
    IgWord              word;
    std::vector<Factor> factors;

    [[nodiscard]] Fingerprint fingerprint() const;
    //! Every factor has rank <= n - 2.
    [[nodiscard]] bool supported() const;
  };

  //! \p w is normalised first.  The identity word has no factors.
  RFactorisation minimal_r_factorisation(IgWord const& w);

  //! (n) for the identity word.
  Fingerprint fingerprint(IgWord const& w);

  struct ThetaOptions {
    GroupMethod method = GroupMethod::theorem;
    //! nullptr means default_graph_cache().
    GraphCache* cache = nullptr;
  };

  struct ThetaStage {
    PermSubgroup H;
    Permutation  t;
    Permutation  a;
    Permutation  b;
    PermSubgroup L;
    Permutation  z;
    //! Junction data; absent at the last stage.
    std::optional<Vertex>                    x_vertex;
    std::optional<Vertex>                    y_vertex;
    std::shared_ptr<PairSubgroup const>      W;
    std::optional<PairPerm>                  rep;
  };

  struct ThetaResult {
    //! L_m z_m, or nullopt for the empty set.
    std::optional<PermCoset> coset;
    //! Stages reached, at most one per factor.
    std::vector<ThetaStage> stages;
  };

  //! (H t, x, y)θ.  Throws FingerprintMismatch, Unsupported if a factor is
  //! above rank n - 2, and InvalidArgument if there are fewer than two
  //! factors or \p start is not a coset in S_{m_1}.
  ThetaResult theta(PermCoset const&      start,
                    RFactorisation const& x,
                    RFactorisation const& y,
                    ThetaOptions const&   options = {});

  //! A witness x_1 = g, x_2, ..., x_m, h for h ∈ (g, x, y)θ with
  //! (a_k^{-1} x_k b_k, x_{k+1}) ∈ W_k (g_k, h_k) and a_m^{-1} x_m b_m = h.
  struct ChainWitness {
    std::vector<Permutation> x;
    Permutation              h;
  };

  //! Rebuilds a chain ending at the representative of the result.  The
  //! start coset of \p result must be a single element.
  std::optional<ChainWitness> chain_witness(ThetaResult const& result);

  //! Checks every chain condition against \p W and \p rep per stage.
  bool check_chain_witness(ChainWitness const&                    witness,
                           ThetaResult const&                     result,
                           std::vector<PairSubgroup const*> const& W);

  struct Verdict {
    enum class Kind { equal, not_equal, unsupported };
    Kind        kind;
    std::string reason;

    [[nodiscard]] bool equal() const noexcept {
      return kind == Kind::equal;
    }
  };

  struct GreenVerdict {
    enum class Kind { related, not_related, unsupported };
    Kind        kind;
    std::string reason;

    [[nodiscard]] bool related() const noexcept {
      return kind == Kind::related;
    }
  };

  //! Throws SizeMismatch if the words are over different n.
  Verdict ig_equal(IgWord const&       w1,
                   IgWord const&       w2,
                   ThetaOptions const& options = {});

  //! J is treated as D.
  GreenVerdict ig_green(IgWord const&       w1,
                        IgWord const&       w2,
                        GreenRelation       rel,
                        ThetaOptions const& options = {});

  struct Schutzenberger {
    std::size_t trivial_start_order = 0;  // |({1}, x, x)θ|
    std::size_t full_start_order    = 0;  // |(G_1, x, x)θ|
    std::size_t quotient_order      = 0;
    bool        normal              = false;
    PermSubgroup inner;
    PermSubgroup outer;
  };

  //! Throws Unsupported or InvalidArgument (fewer than two factors).
  Schutzenberger schutzenberger(IgWord const& w, ThetaOptions const& options = {});

  //! Pairs (e, f), neither the identity, forming a basic pair with ef = g;
  //! sorted.  Memoised per n.
  std::vector<std::pair<Idempotent, Idempotent>> const& expansions_of(Idempotent const& g);

  //! All one-step contractions (adjacent basic pair -> product), then all
  //! one-step expansions, in position order.
  std::vector<IgWord> basic_rewrites(IgWord const& w);
  std::vector<IgWord> contractions(IgWord const& w);

  //! Every word reachable from \p w by contractions alone, \p w included.
  std::vector<IgWord> contraction_closure(IgWord const& w);

}  // namespace igtn

#endif  // IGTN_IG_WORDS_HPP_
