#include "hypwin/cli.hpp"

#include "hypwin/error.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace hypwin::cli {

void RunConfig::validate() const
{
    if (n < 4 || n % 2 != 0) {
        throw ValidationError("n", "must be even and at least 4");
    }
    if (pad < 1) {
        throw ValidationError("pad", "must be at least 1");
    }
}

void Table::add_row(std::vector<Cell> row)
{
    row.resize(columns.size());
    rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("no column named " + name);
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {

std::string csv_field(const Cell& c)
{
    struct Visitor
    {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double v) const { return std::isfinite(v) ? format_double(v) : std::string{}; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(const std::string& s) const
        {
            if (s.find_first_of(",\"\n") == std::string::npos) {
                return s;
            }
            std::string quoted = "\"";
            for (char ch : s) {
                quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            }
            return quoted + "\"";
        }
    };
    return std::visit(Visitor{}, c);
}

} // namespace

void write_csv(const Table& table, std::ostream& out)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_field(row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out)
{
    auto records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json record = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            const Cell& c = row[i];
            if (const auto* d = std::get_if<double>(&c); d && std::isfinite(*d)) {
                // round-trip through the CSV formatting so both outputs carry the same digits
                record[table.columns[i]] = std::stod(format_double(*d));
            } else if (const auto* l = std::get_if<long long>(&c)) {
                record[table.columns[i]] = *l;
            } else if (const auto* s = std::get_if<std::string>(&c)) {
                record[table.columns[i]] = *s;
            } else {
                record[table.columns[i]] = nullptr;
            }
        }
        records.push_back(std::move(record));
    }
    out << records.dump(2) << '\n';
}

} // namespace hypwin::cli
