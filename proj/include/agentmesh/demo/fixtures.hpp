#pragma once

#include "agentmesh/common/errors.hpp"
#include "agentmesh/common/json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace agentmesh::demo {

struct Headline {
    std::string headline;
    std::string date;
    std::string sentiment; // positive | negative | neutral

    bool operator==(const Headline&) const = default;
};

struct CompanyInfo {
    std::string name;
    std::string sector;
    std::string summary;

    bool operator==(const CompanyInfo&) const = default;
};

struct Financials {
    double revenue = 0.0;
    double operating_income = 0.0;
    double net_income = 0.0;
    int fiscal_year = 0;

    bool operator==(const Financials&) const = default;
};

// One symbol's deterministic stand-in for live market data.
struct StockRecord {
    std::string symbol;
    double price = 0.0;
    double change = 0.0;
    double change_percent = 0.0; // must equal 100*change/(price-change) within 0.01
    std::int64_t volume = 0;
    std::vector<Headline> news;
    CompanyInfo company;
    Financials financials;
};

class StockFixture {
public:
    // Throws ParseError/SchemaError on malformed files, SchemaError when a
    // record breaks the change_percent consistency rule.
    static StockFixture load(const std::string& path);
    static StockFixture from_json(const json& value);

    std::optional<StockRecord> get(const std::string& symbol) const;
    std::vector<std::string> symbols() const; // ascending

private:
    std::map<std::string, StockRecord> records_;
};

// name (case-folded, trimmed) -> uppercase symbol
class TickerAliasTable {
public:
    static TickerAliasTable load(const std::string& path);
    static TickerAliasTable from_json(const json& value);

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

std::string fold_case_and_trim(const std::string& text);

// Union of direct symbol tokens (1-5 uppercase letters, delimiter-bounded,
// present in `known_symbols`) and alias-table matches (longest alias wins on
// overlap). De-duplicated, ordered by first occurrence in the text.
std::vector<std::string> extract_tickers(const std::string& text,
                                         const TickerAliasTable& aliases,
                                         const std::vector<std::string>& known_symbols);

} // namespace agentmesh::demo
