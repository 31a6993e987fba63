#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "rotodec/cli.hpp"

namespace rotodec::cli
{
namespace
{
std::string quote_csv(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s)
    {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + '"';
}

std::string cell(const Value& v)
{
    if (const double* d = std::get_if<double>(&v))
        return format_number(*d);
    return std::get<std::string>(v);
}

Json json_value(const Value& v)
{
    if (const double* d = std::get_if<double>(&v))
    {
        if (std::isfinite(*d))
            return *d;
        return format_number(*d);
    }
    return std::get<std::string>(v);
}
} // namespace

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

std::string to_csv(const Output& out)
{
    std::ostringstream os;
    if (out.records.empty())
        return {};
    const Record& first = out.records.front();
    for (std::size_t i = 0; i < first.size(); ++i)
        os << (i ? "," : "") << quote_csv(first[i].first);
    os << "\n";
    for (const Record& r : out.records)
    {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "," : "") << quote_csv(cell(r[i].second));
        os << "\n";
    }
    return os.str();
}

std::string to_json(const Output& out)
{
    Json doc = Json::object();
    doc["config"] = out.config;
    doc["records"] = Json::array();
    for (const Record& r : out.records)
    {
        Json rec = Json::object();
        for (const auto& [key, value] : r)
            rec[key] = json_value(value);
        doc["records"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string to_table(const Output& out)
{
    if (out.records.empty())
        return {};
    const Record& first = out.records.front();
    std::vector<std::size_t> width(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        width[i] = first[i].first.size();
    for (const Record& r : out.records)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], cell(r[i].second).size());

    std::ostringstream os;
    auto row = [&](auto&& get) {
        for (std::size_t i = 0; i < width.size(); ++i)
        {
            std::string s = get(i);
            os << (i ? "  " : "") << s;
            if (i + 1 < width.size())
                os << std::string(width[i] - s.size(), ' ');
        }
        os << '\n';
    };
    row([&](std::size_t i) { return first[i].first; });
    for (const Record& r : out.records)
        row([&](std::size_t i) { return cell(r[i].second); });
    return os.str();
}

} // namespace rotodec::cli
