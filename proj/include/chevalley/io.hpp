#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "chevalley/group.hpp"
#include "chevalley/smith.hpp"
#include "chevalley/twisted.hpp"

namespace chevalley {

using Json = nlohmann::ordered_json;
using AnyField = std::variant<RationalField, QuadraticField, RationalFunctionField>;

/// "Q", "Q(sqrt(d))", "Q(T)".
AnyField parse_field(std::string_view text);
std::string field_name(const AnyField& field);

/// "id", "conj", "mobius(a,b,c,d)".
FieldAutomorphism parse_field_automorphism(std::string_view text);
std::string format_field_automorphism(const FieldAutomorphism& delta);

/// Whitespace-separated tokens x(alpha;t), h(alpha;t), n(alpha;t) with alpha a
/// coefficient vector such as [1,0].
template <class Field>
Word<Field> parse_word(const ChevalleyGroup<Field>& group, std::string_view text);
template <class Field>
std::string format_word(const ChevalleyGroup<Field>& group, const Word<Field>& word);

std::vector<std::string> split_list(std::string_view text, char separator = ',');

Json root_system_json(const RootSystem& roots);
Json int_matrix_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
Json smith_json(const SmithForm& snf);
Json structure_constants_json(const ChevalleyBasis& basis);

template <class Field>
Json group_element_json(const ChevalleyGroup<Field>& group, const Matrix<Field>& x);
template <class Field>
Matrix<Field> group_element_from_json(const ChevalleyGroup<Field>& group, const Json& j);

Json certificate_json(const WitnessCertificate& certificate);
WitnessCertificate certificate_from_json(const Json& j);

template <class Field>
Json refutation_json(const ChevalleyGroup<Field>& group, const Refutation<Field>& refutation);

}  // namespace chevalley
