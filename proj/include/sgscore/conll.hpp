#ifndef SGSCORE_CONLL_HPP
#define SGSCORE_CONLL_HPP

#include <iosfwd>
#include <vector>

#include "sgscore/annotation.hpp"

namespace sgscore {

// Reads analyzer output in a CoNLL-style tab-separated format and converts
// it to annotated captions.
//
// One token per line, nine columns:
//   ID FORM LEMMA POS HEAD DEPREL CASE PROP ARGS
// with 1-based token IDs, HEAD 0 for the root, "_" for an empty column,
// PROP a truthy flag ("1", "true", "yes", "prop"), and ARGS a |-separated
// list of case:target pairs with 1-based targets. POS accepts the native
// lowercase tags and the common uppercase UPOS tags (NOUN, VERB, ADJ, ...).
// Sentences are separated by blank lines; a "# id = X" comment names the
// following sentence, otherwise sentences are numbered s1, s2, ...
std::vector<AnnotatedCaption> read_conll(std::istream &in);

}  // namespace sgscore

#endif  // SGSCORE_CONLL_HPP
