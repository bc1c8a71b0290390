#include "ginv/json_io.hpp"

#include "ginv/rational.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace ginv {

namespace {

Json rational_entry(const Rational& q) {
  if (denominator(q) == 1) {
    const Integer num = numerator(q);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(num);
  }
  return rational_to_string(q);
}

Result<Rational> entry_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    auto q = rational_from_string(j.get<std::string>());
    if (q) return *q;
    return fail(Err::malformed_spec, "matrix entry '" + j.get<std::string>() +
                                         "' is not an integer or \"p/q\" string");
  }
  return fail(Err::malformed_spec, "matrix entries must be integers or \"p/q\" strings");
}

}  // namespace

Json element_to_json(const Element& e) {
  switch (e.ring()->kind()) {
    case RingKind::zmod:
      return e.residue();
    case RingKind::matrix_rational: {
      const auto& m = e.rat_matrix();
      Json rows = Json::array();
      for (int i = 0; i < m.dim; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim; ++j)
          row.push_back(rational_entry(m.e[static_cast<std::size_t>(i) * m.dim + j]));
        rows.push_back(std::move(row));
      }
      return rows;
    }
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod: {
      const auto& m = e.mod_matrix();
      Json rows = Json::array();
      for (int i = 0; i < m.dim; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim; ++j)
          row.push_back(m.e[static_cast<std::size_t>(i) * m.dim + j]);
        rows.push_back(std::move(row));
      }
      return rows;
    }
    case RingKind::table:
      return Json{{"idx", e.table_index()}};
  }
  throw GinvError(Err::internal_error, "unhandled ring kind in element_to_json");
}

Result<Element> element_from_json(const RingPtr& ring, const Json& j) {
  switch (ring->kind()) {
    case RingKind::zmod: {
      if (!j.is_number_integer())
        return fail(Err::malformed_spec, "a zmod element must be a JSON integer");
      if (j.is_number_unsigned()) {
        const std::uint64_t v = j.get<std::uint64_t>();
        return ring->from_integer(static_cast<std::int64_t>(v % ring->descriptor().modulus));
      }
      return ring->from_integer(j.get<std::int64_t>());
    }
    case RingKind::matrix_rational:
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod: {
      if (!j.is_array())
        return fail(Err::malformed_spec, "a matrix element must be a JSON array of rows");
      std::vector<std::vector<Rational>> rows;
      rows.reserve(j.size());
      for (const Json& row : j) {
        if (!row.is_array())
          return fail(Err::malformed_spec, "each matrix row must be a JSON array");
        std::vector<Rational> out;
        out.reserve(row.size());
        for (const Json& cell : row) {
          auto q = entry_from_json(cell);
          if (!q.ok()) return q.failure();
          out.push_back(q.value());
        }
        rows.push_back(std::move(out));
      }
      return ring->from_entries(rows);
    }
    case RingKind::table: {
      if (!j.is_object() || !j.contains("idx") || !j["idx"].is_number_unsigned())
        return fail(Err::malformed_spec, "a table element must be {\"idx\": k}");
      return ring->from_index(j["idx"].get<std::uint64_t>());
    }
  }
  throw GinvError(Err::internal_error, "unhandled ring kind in element_from_json");
}

std::string element_to_text(const Element& e) {
  switch (e.ring()->kind()) {
    case RingKind::zmod:
      return std::to_string(e.residue());
    case RingKind::matrix_rational: {
      const auto& m = e.rat_matrix();
      std::ostringstream out;
      out << '[';
      for (int i = 0; i < m.dim; ++i) {
        out << (i ? ",[" : "[");
        for (int j = 0; j < m.dim; ++j)
          out << (j ? "," : "")
              << rational_to_string(m.e[static_cast<std::size_t>(i) * m.dim + j]);
        out << ']';
      }
      out << ']';
      return out.str();
    }
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod: {
      const auto& m = e.mod_matrix();
      std::ostringstream out;
      out << '[';
      for (int i = 0; i < m.dim; ++i) {
        out << (i ? ",[" : "[");
        for (int j = 0; j < m.dim; ++j)
          out << (j ? "," : "") << m.e[static_cast<std::size_t>(i) * m.dim + j];
        out << ']';
      }
      out << ']';
      return out.str();
    }
    case RingKind::table:
      return "#" + std::to_string(e.table_index());
  }
  throw GinvError(Err::internal_error, "unhandled ring kind in element_to_text");
}

Json certificate_to_json(const Certificate& c) {
  Json eqs = Json::array();
  for (const EquationCheck& q : c.equations) {
    Json item;
    item["label"] = q.label;
    item["lhs"] = q.lhs ? element_to_json(*q.lhs) : Json(nullptr);
    item["rhs"] = q.rhs ? element_to_json(*q.rhs) : Json(nullptr);
    item["holds"] = q.holds;
    eqs.push_back(std::move(item));
  }
  Json out;
  out["kind"] = std::string(inverse_kind_name(c.kind));
  out["form"] = std::string(cert_form_name(c.form));
  out["subject"] = element_to_json(c.subject);
  out["witness"] = element_to_json(c.witness);
  out["equations"] = std::move(eqs);
  out["valid"] = c.valid;
  return out;
}

Json failure_to_json(const Failure& f) {
  Json out;
  out["error"] = std::string(err_name(f.code));
  out["because"] = f.detail;
  return out;
}

}  // namespace ginv
