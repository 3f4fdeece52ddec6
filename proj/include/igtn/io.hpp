// Text and JSON input/output.  Everything here is 1-based: the point k of
// [1,n] is stored as k - 1 in memory.

#ifndef IGTN_IO_HPP_
#define IGTN_IO_HPP_

#include <string>       // for string
#include <string_view>  // for string_view

#include "json.hpp"

#include "contact_graph.hpp"
#include "ig_words.hpp"

namespace igtn {

  using json = nlohmann::json;

  inline constexpr int kSchemaVersion = 1;

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  //! "{1,3,5}"
  std::string format_subset(Subset const& A);
  //! "{{1,3},{2,4},{5}}"
  std::string format_partition(SetPartition const& P);
  //! "[1,1,3,4]"
  std::string format_transformation(Transformation const& f);
  //! "[2,1,3]"
  std::string format_permutation(Permutation const& p);
  //! "A|P"
  std::string format_vertex(Vertex const& v);
  //! "e(i,j)" for rank n - 1 idempotents, the image array otherwise.
  std::string format_letter(Idempotent const& e);
  //! Letters separated by spaces; "id" for the identity word.
  std::string format_word(IgWord const& w);
  std::string format_type(PairType const& t);

  //! Brace or bracket notation: "{1,3,5}" or "[1,3,5]".
  Subset parse_subset(std::string_view s, int n);
  //! "{{1,3},{2,4},{5}}" or "[[1,3],[2,4],[5]]".
  SetPartition parse_partition(std::string_view s, int n);
  //! "e(i,j)", "id" or an image array "[1,1,3,4]".  Throws InvalidArgument
  //! unless the result is an idempotent of T_n.
  Idempotent parse_letter(std::string_view s, int n);
  //! A JSON array of letters, or letters separated by white space.
  IgWord parse_word(std::string_view s, int n);

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  json to_json(Subset const& A);
  json to_json(SetPartition const& P);
  json to_json(Permutation const& p);
  json to_json(PairPerm const& p);
  json to_json(Transformation const& f);
  json to_json(Vertex const& v);
  json to_json(PairType const& t);
  json to_json(IgWord const& w);
  json to_json(RegularTriple const& t);
  json to_json(RFactorisation const& f);
  json to_json(PairSubgroup const& G, bool with_elements = false);
  json to_json(PermSubgroup const& G, bool with_elements = false);
  json to_json(ThetaResult const& r);
  json to_json(Verdict const& v);
  json to_json(GreenVerdict const& v);

  //! Vertices with component ids, then edges, in build order.
  json graph_to_json(ContactGraph const& g);
  //! DOT text; vertices labelled "A|P", edges by witness and label.
  std::string graph_to_dot(ContactGraph const& g);

  std::string to_string(Verdict::Kind k);
  std::string to_string(GreenVerdict::Kind k);
  std::string to_string(GreenRelation rel);
  //! "R", "L", "H", "D" or "J"; throws InvalidArgument.
  GreenRelation green_relation_from_string(std::string_view s);

}  // namespace igtn

#endif  // IGTN_IO_HPP_
