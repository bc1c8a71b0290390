#pragma once

#include "ginv/inverse.hpp"
#include "ginv/ring.hpp"

#include <json.hpp>

#include <string>

namespace ginv {

// Insertion-ordered JSON keeps output key order stable for golden-file tests.
using Json = nlohmann::ordered_json;

// ZMOD elements encode as integers, matrix elements as arrays of rows whose
// entries are integers or "p/q" strings in lowest terms, table elements as
// {"idx": k}.
Json element_to_json(const Element& e);
Result<Element> element_from_json(const RingPtr& ring, const Json& j);

// Compact one-line rendering for plain-text tables.
std::string element_to_text(const Element& e);

// {kind, form, subject, witness, equations: [{label, lhs, rhs, holds}], valid}
Json certificate_to_json(const Certificate& c);

// {"error": <stable name>, "because": <detail>}
Json failure_to_json(const Failure& f);

}  // namespace ginv
