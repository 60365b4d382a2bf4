#pragma once

#include "lrx/constructions.hpp"

#include <string>
#include <variant>

namespace lrx {

enum class DocKind { algebra, crossed_datum, lr_twist, mirror_brz, iterated, lr_smash };

std::string_view dockind_name(DocKind k);

/// One "lrx/1" JSON document: a field, a kind tag and the kind's payload.
/// Sparse tensor sections store (index tuple, scalar string) entries;
/// omitted entries are zero.
struct Document {
    FieldSpec field;
    DocKind kind = DocKind::algebra;
    std::variant<Algebra, CrossedDatum, LRTwistData, MirrorBrzezinskiData, IteratedData, LRSmashData>
        payload;
};

Document document_of(Algebra a);
Document document_of(CrossedDatum d);
Document document_of(SpecializationData s);
Document document_of(const BuiltinInstance& inst);

/// Parses and validates a document; every type invariant is re-checked at
/// load. `field_override` reinterprets all scalar literals in another field.
Document parse_document(std::string_view json_text,
                        std::optional<FieldSpec> field_override = std::nullopt);

/// Deterministic output: fixed key order, sparse entries sorted by index
/// tuple, canonical scalar text, newline-terminated.
std::string serialize_document(const Document& doc);

/// The crossed datum a document denotes (running the matching builder for
/// specialization kinds). Plain algebra documents are rejected.
CrossedDatum materialize_datum(const Document& doc);

}  // namespace lrx
