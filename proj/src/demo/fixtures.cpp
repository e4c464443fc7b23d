#include "agentmesh/demo/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace agentmesh::demo {

namespace {

json load_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(std::string(what) + " file not found: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json value = json::parse(buffer.str(), nullptr, false);
    if (value.is_discarded()) {
        throw ParseError(std::string(what) + " file is not valid JSON: " + path);
    }
    return value;
}

double number_field(const json& record, const std::string& key, const std::string& where) {
    if (!record.contains(key) || !record.at(key).is_number()) {
        throw SchemaError(where + " requires numeric field " + key);
    }
    return record.at(key).get<double>();
}

} // namespace

StockFixture StockFixture::from_json(const json& value) {
    if (!value.is_object()) {
        throw SchemaError("stock fixture must map symbols to records");
    }
    StockFixture fixture;
    for (const auto& [symbol, entry] : value.items()) {
        if (!entry.is_object()) {
            throw SchemaError(symbol + ": fixture record must be a JSON object");
        }
        StockRecord record;
        record.symbol = symbol;
        record.price = number_field(entry, "price", symbol);
        record.change = number_field(entry, "change", symbol);
        record.change_percent = number_field(entry, "change_percent", symbol);
        if (!entry.contains("volume") || !entry.at("volume").is_number_integer()) {
            throw SchemaError(symbol + " requires integer field volume");
        }
        record.volume = entry.at("volume").get<std::int64_t>();

        double previous_close = record.price - record.change;
        if (previous_close == 0.0 ||
            std::abs(record.change_percent - 100.0 * record.change / previous_close) > 0.01) {
            throw SchemaError(symbol + ": change_percent inconsistent with price/change");
        }

        for (const json& item : entry.value("news", json::array())) {
            Headline headline;
            headline.headline = item.value("headline", "");
            headline.date = item.value("date", "");
            headline.sentiment = item.value("sentiment", "neutral");
            if (headline.headline.empty()) {
                throw SchemaError(symbol + ": news item requires a headline");
            }
            if (headline.sentiment != "positive" && headline.sentiment != "negative" &&
                headline.sentiment != "neutral") {
                throw SchemaError(symbol + ": unknown sentiment " + headline.sentiment);
            }
            record.news.push_back(std::move(headline));
        }

        const json company = entry.value("company", json::object());
        record.company.name = company.value("name", "");
        record.company.sector = company.value("sector", "");
        record.company.summary = company.value("summary", "");

        const json financials = entry.value("financials", json::object());
        if (!financials.empty()) {
            record.financials.revenue = number_field(financials, "revenue", symbol + ".financials");
            record.financials.operating_income =
                number_field(financials, "operating_income", symbol + ".financials");
            record.financials.net_income =
                number_field(financials, "net_income", symbol + ".financials");
            record.financials.fiscal_year = financials.value("fiscal_year", 0);
        }

        fixture.records_[symbol] = std::move(record);
    }
    return fixture;
}

StockFixture StockFixture::load(const std::string& path) {
    return from_json(load_json_file(path, "stock fixture"));
}

std::optional<StockRecord> StockFixture::get(const std::string& symbol) const {
    auto it = records_.find(symbol);
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> StockFixture::symbols() const {
    std::vector<std::string> out;
    out.reserve(records_.size());
    for (const auto& [symbol, record] : records_) out.push_back(symbol);
    return out;
}

std::string fold_case_and_trim(const std::string& text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string out = text.substr(begin, end - begin);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

TickerAliasTable TickerAliasTable::from_json(const json& value) {
    if (!value.is_object()) {
        throw SchemaError("alias table must map names to symbols");
    }
    TickerAliasTable table;
    for (const auto& [name, symbol] : value.items()) {
        if (!symbol.is_string() || symbol.get<std::string>().empty()) {
            throw SchemaError("alias \"" + name + "\" must map to a non-empty symbol");
        }
        std::string key = fold_case_and_trim(name);
        if (key.empty()) {
            throw SchemaError("alias table contains an empty name");
        }
        std::string upper = symbol.get<std::string>();
        for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        table.entries_[key] = upper;
    }
    return table;
}

TickerAliasTable TickerAliasTable::load(const std::string& path) {
    return from_json(load_json_file(path, "alias table"));
}

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

std::string fold_case(const std::string& text) {
    std::string out = text;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::vector<std::string> extract_tickers(const std::string& text,
                                         const TickerAliasTable& aliases,
                                         const std::vector<std::string>& known_symbols) {
    std::vector<std::pair<std::size_t, std::string>> hits; // (position, symbol)

    // (a) delimiter-bounded tokens of 1-5 uppercase letters naming a known symbol
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_word_char(text[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && is_word_char(text[i])) ++i;
        std::string token = text.substr(start, i - start);
        bool all_upper = token.size() >= 1 && token.size() <= 5 &&
                         std::all_of(token.begin(), token.end(), [](char c) {
                             return c >= 'A' && c <= 'Z';
                         });
        if (all_upper &&
            std::find(known_symbols.begin(), known_symbols.end(), token) != known_symbols.end()) {
            hits.emplace_back(start, token);
        }
    }

    // (b) alias names, longest alias first so "samsung electronics" beats "samsung"
    std::string folded = fold_case(text);
    std::vector<std::pair<std::string, std::string>> by_length(aliases.entries().begin(),
                                                               aliases.entries().end());
    std::sort(by_length.begin(), by_length.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a.first < b.first;
    });
    std::vector<bool> claimed(folded.size(), false);
    for (const auto& [name, symbol] : by_length) {
        std::size_t pos = folded.find(name);
        while (pos != std::string::npos) {
            bool bounded = (pos == 0 || !is_word_char(folded[pos - 1])) &&
                           (pos + name.size() == folded.size() ||
                            !is_word_char(folded[pos + name.size()]));
            bool overlaps = false;
            for (std::size_t k = pos; k < pos + name.size(); ++k) {
                if (claimed[k]) {
                    overlaps = true;
                    break;
                }
            }
            if (bounded && !overlaps) {
                for (std::size_t k = pos; k < pos + name.size(); ++k) claimed[k] = true;
                hits.emplace_back(pos, symbol);
                break;
            }
            pos = folded.find(name, pos + 1);
        }
    }

    std::stable_sort(hits.begin(), hits.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> result;
    for (const auto& [pos, symbol] : hits) {
        (void)pos;
        if (std::find(result.begin(), result.end(), symbol) == result.end()) {
            result.push_back(symbol);
        }
    }
    return result;
}

} // namespace agentmesh::demo
