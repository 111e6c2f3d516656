// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#include "nmrank/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "nmrank/error.hpp"
#include "nmrank/io.hpp"

namespace nmrank {

namespace {
constexpr char kMagic[8] = {'N', 'M', 'R', 'C', 'I', 'D', 'X', '1'};
constexpr std::uint32_t kVersion = 1;
} // namespace

Split parse_split(std::string_view s) {
    if (s == "train") return Split::train;
    if (s == "dev") return Split::dev;
    if (s == "test") return Split::test;
    if (s == "tran") return Split::tran;
    throw DataError("unknown split label: " + std::string(s));
}

std::string_view split_name(Split s) {
    switch (s) {
        case Split::train: return "train";
        case Split::dev: return "dev";
        case Split::test: return "test";
        case Split::tran: return "tran";
    }
    return "train";
}

Field parse_field(std::string_view s) {
    if (s == "original") return Field::original;
    if (s == "lemma") return Field::lemma;
    throw ConfigError("model.field must be `original` or `lemma`, got: " + std::string(s));
}

std::vector<QaPair> read_corpus_tsv(const std::string& path) {
    std::ifstream in(path);
    require_data(in.good(), "cannot open corpus file: " + path);
    std::vector<QaPair> pairs;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto where = path + ":" + std::to_string(lineno);
        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        std::size_t t3 = t2 == std::string::npos ? t2 : line.find('\t', t2 + 1);
        require_data(t3 != std::string::npos,
                     where + ": expected `id<TAB>split<TAB>question<TAB>answer`");
        QaPair p;
        p.id = line.substr(0, t1);
        p.split = parse_split(line.substr(t1 + 1, t2 - t1 - 1));
        p.question = line.substr(t2 + 1, t3 - t2 - 1);
        p.answer = line.substr(t3 + 1);
        require_data(!p.id.empty(), where + ": empty pair id");
        require_data(!p.answer.empty(), where + ": empty answer text");
        require_data(seen.insert(p.id).second, where + ": duplicate pair id `" + p.id + "`");
        pairs.push_back(std::move(p));
    }
    return pairs;
}

void write_corpus_tsv(const std::string& path, const std::vector<QaPair>& pairs) {
    std::ostringstream out;
    for (const auto& p : pairs) {
        out << p.id << '\t' << split_name(p.split) << '\t' << p.question << '\t' << p.answer
            << '\n';
    }
    atomic_write_file(path, out.str());
}

CorpusIndex CorpusIndex::build(const std::vector<QaPair>& pairs, const StopwordSet& stopwords,
                               const LemmaMap* lemmas) {
    require_data(!pairs.empty(), "empty corpus");
    CorpusIndex ci;
    ForwardIndexBuilder original;
    ForwardIndexBuilder lemma;
    ci.lemma_aliased_ = (lemmas == nullptr);
    for (const auto& p : pairs) {
        const TokenList tokens = tokenize(p.answer, stopwords);
        original.add_document(tokens);
        if (lemmas) lemma.add_document(apply_lemmas(tokens, *lemmas));
        ci.doc_ids_.push_back(p.id);
        ci.splits_.push_back(p.split);
    }
    ci.original_ = original.finish();
    if (lemmas) ci.lemma_ = lemma.finish();
    ci.digest_ = fnv1a64(ci.serialize_payload());
    return ci;
}

DocId CorpusIndex::doc_of(std::string_view pair_id) const {
    for (DocId d = 0; d < num_docs(); ++d) {
        if (doc_ids_[d] == pair_id) return d;
    }
    return kInvalidDoc;
}

std::string CorpusIndex::serialize_payload() const {
    BinaryWriter w;
    w.put_u32(num_docs());
    for (DocId d = 0; d < num_docs(); ++d) {
        w.put_string(doc_ids_[d]);
        w.put_u8(static_cast<std::uint8_t>(splits_[d]));
    }
    w.put_u8(lemma_aliased_ ? 1 : 0);
    original_.vocab.serialize(w);
    original_.fwd.serialize(w);
    if (!lemma_aliased_) {
        lemma_.vocab.serialize(w);
        lemma_.fwd.serialize(w);
    }
    return w.take();
}

void CorpusIndex::save(const std::string& path) const {
    const std::string payload = serialize_payload();
    digest_ = fnv1a64(payload);
    BinaryWriter w;
    w.put_bytes(kMagic, sizeof(kMagic));
    w.put_u32(kVersion);
    w.put_u64(digest_);
    w.put_bytes(payload.data(), payload.size());
    atomic_write_file(path, w.bytes());
}

CorpusIndex CorpusIndex::load(const std::string& path) {
    const std::string bytes = read_file_bytes(path);
    BinaryReader r(bytes);
    require_data(bytes.size() >= sizeof(kMagic) + 12 &&
                     std::string_view(bytes).substr(0, sizeof(kMagic)) ==
                         std::string_view(kMagic, sizeof(kMagic)),
                 "not a corpus index file: " + path);
    r = BinaryReader(std::string_view(bytes).substr(sizeof(kMagic)));
    const std::uint32_t version = r.get_u32();
    require_data(version == kVersion, "unsupported corpus index version in " + path);
    const std::uint64_t stored_digest = r.get_u64();
    const std::string_view payload = std::string_view(bytes).substr(sizeof(kMagic) + 12);
    require_data(fnv1a64(payload) == stored_digest, "corpus index digest mismatch (corrupt file): " + path);

    BinaryReader pr(payload);
    CorpusIndex ci;
    const std::uint32_t n = pr.get_u32();
    ci.doc_ids_.reserve(n);
    ci.splits_.reserve(n);
    for (std::uint32_t d = 0; d < n; ++d) {
        ci.doc_ids_.push_back(pr.get_string());
        ci.splits_.push_back(static_cast<Split>(pr.get_u8()));
    }
    ci.lemma_aliased_ = pr.get_u8() != 0;
    ci.original_.vocab = Vocabulary::deserialize(pr);
    ci.original_.fwd = ForwardIndex::deserialize(pr);
    if (!ci.lemma_aliased_) {
        ci.lemma_.vocab = Vocabulary::deserialize(pr);
        ci.lemma_.fwd = ForwardIndex::deserialize(pr);
    }
    ci.digest_ = stored_digest;
    return ci;
}

} // namespace nmrank
