#include "wcount/serialize.hpp"

#include "wcount/errors.hpp"

#include <algorithm>
#include <limits>

namespace wcount {

namespace {

constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";

template <typename T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw PreconditionViolated(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionViolated(std::string("bad field \"") + key + "\": " + e.what());
    }
}

}  // namespace

Json big_to_json(const BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
    return value.str();
}

Json to_json(const LinearCode& code) {
    Json cols = Json::array();
    for (const auto& c : code.columns()) {
        Json entries = Json::array();
        for (auto x : c.entries) entries.push_back(x.value);
        cols.push_back(Json::array({entries, c.multiplicity}));
    }
    return {{"q", code.field().order()}, {"k", code.dimension()}, {"n", code.length()}, {"columns", cols}};
}

LinearCode linear_code_from_json(const Json& j) {
    const auto q = get_field<std::uint64_t>(j, "q");
    const auto k = get_field<std::size_t>(j, "k");
    const Json& cols = j.contains("columns") ? j.at("columns") : Json();
    if (!cols.is_array()) throw PreconditionViolated("\"columns\" must be an array");
    auto field = make_field(q);
    std::vector<Column> columns;
    for (const auto& entry : cols) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || !entry[1].is_number_unsigned())
            throw PreconditionViolated("each column must be [[entries...], multiplicity]");
        Column c;
        for (const auto& x : entry[0]) {
            if (!x.is_number_unsigned()) throw PreconditionViolated("column entries must be non-negative integers");
            c.entries.push_back(field->element(x.get<std::uint64_t>()));
        }
        c.multiplicity = entry[1].get<std::uint64_t>();
        columns.push_back(std::move(c));
    }
    LinearCode code(field, k, std::move(columns));
    if (j.contains("n") && get_field<std::uint64_t>(j, "n") != code.length())
        throw PreconditionViolated("\"n\" does not match the multiplicity sum");
    return code;
}

Json to_json(const UnrestrictedCode& code) {
    Json words = Json::array();
    for (const auto& w : code.words()) {
        if (code.alphabet_size() <= 36) {
            std::string s;
            for (auto x : w) s.push_back(kDigits[x]);
            words.push_back(s);
        } else {
            words.push_back(w);
        }
    }
    return {{"q", code.alphabet_size()}, {"n", code.length()}, {"words", words}};
}

UnrestrictedCode unrestricted_code_from_json(const Json& j) {
    const auto q = get_field<std::uint32_t>(j, "q");
    const Json& words = j.contains("words") ? j.at("words") : Json();
    if (!words.is_array()) throw PreconditionViolated("\"words\" must be an array");
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& w : words) {
        std::vector<std::uint32_t> word;
        if (w.is_string()) {
            for (char ch : w.get<std::string>()) {
                const std::string_view digits(kDigits);
                const auto pos = digits.find(ch);
                if (pos == std::string_view::npos) throw PreconditionViolated("bad symbol in word");
                word.push_back(static_cast<std::uint32_t>(pos));
            }
        } else if (w.is_array()) {
            for (const auto& x : w) {
                if (!x.is_number_unsigned()) throw PreconditionViolated("bad symbol in word");
                word.push_back(x.get<std::uint32_t>());
            }
        } else {
            throw PreconditionViolated("words must be strings or arrays");
        }
        out.push_back(std::move(word));
    }
    UnrestrictedCode code(q, std::move(out));
    if (j.contains("n") && get_field<std::size_t>(j, "n") != code.length())
        throw PreconditionViolated("\"n\" does not match the word length");
    return code;
}

Json to_json(const DifferenceSet& ds) { return {{"v", ds.modulus}, {"residues", ds.residues}}; }

DifferenceSet difference_set_from_json(const Json& j) {
    DifferenceSet ds{get_field<std::uint64_t>(j, "v"), get_field<std::vector<std::uint64_t>>(j, "residues")};
    std::sort(ds.residues.begin(), ds.residues.end());
    return ds;
}

Json to_json(const WeightSpectrum& spectrum) { return spectrum.weights(); }

Json to_json(const std::set<std::size_t>& distances) { return Json(std::vector<std::size_t>(distances.begin(), distances.end())); }

Json to_json(const SearchReport& r) {
    Json params = {{"n", r.n}, {"q", r.q}};
    params[r.kind == "exhaustive_N" ? "M" : "k"] = r.k;
    Json j = {{"kind", r.kind}, {"params", params}, {"trials", r.trials}, {"seed", r.seed}, {"best_count", r.best_count}};
    if (r.linear_witness)
        j["best_witness"] = to_json(*r.linear_witness);
    else if (r.nonlinear_witness)
        j["best_witness"] = to_json(*r.nonlinear_witness);
    else
        j["best_witness"] = nullptr;
    return j;
}

Json to_json(const BoundReport& r) {
    Json inputs = {{"k", r.k}, {"q", r.q}};
    if (r.n) inputs["n"] = *r.n;
    return {{"kind", to_string(r.kind)}, {"value", big_to_json(r.value)}, {"inputs", inputs}};
}

Json to_json(const TableRow& row) {
    Json j = {{"k", row.k},
              {"q", row.q},
              {"n", row.n},
              {"published", row.published},
              {"published_relation", row.published_is_exact ? "=" : ">="},
              {"upper_prop2", big_to_json(row.upper)},
              {"trials", row.trials},
              {"skipped", row.skipped}};
    if (row.skipped) {
        j["reason"] = row.reason;
    } else {
        j["best_count"] = row.best_count;
        j["reached_published"] = row.best_count >= row.published;
    }
    return j;
}

}  // namespace wcount
