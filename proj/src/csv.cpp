#include "phasediff/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "phasediff/run_config.hpp"

namespace phasediff {

void write_csv(std::ostream& os, const CsvDocument& doc)
{
    for (const auto& [key, value] : doc.metadata) {
        os << "# " << key << ": " << value << '\n';
    }
    for (std::size_t c = 0; c < doc.table.columns.size(); ++c) {
        os << (c == 0 ? "" : ",") << doc.table.columns[c];
    }
    os << '\n';
    for (const auto& row : doc.table.rows) {
        if (row.size() != doc.table.columns.size()) {
            throw std::logic_error("CSV row width does not match the header");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c == 0 ? "" : ",") << format_real(row[c]);
        }
        os << '\n';
    }
}

std::string to_csv(const CsvDocument& doc)
{
    std::ostringstream os;
    write_csv(os, doc);
    return os.str();
}

void write_csv_file(const std::string& path, const CsvDocument& doc)
{
    const std::string text = to_csv(doc);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

std::string plot_script(const std::string& csv_path, const CsvDocument& doc)
{
    std::string title;
    for (const auto& [key, value] : doc.metadata) {
        if (key == "title") {
            title = value;
        }
    }
    std::ostringstream os;
    os << "import sys\n"
          "import matplotlib\n"
          "matplotlib.use(\"Agg\")\n"
          "import matplotlib.pyplot as plt\n"
          "import numpy as np\n\n"
       << "CSV = " << '"' << csv_path << '"' << "\n"
       << "TITLE = " << '"' << title << '"' << "\n\n"
       << "with open(CSV) as fh:\n"
          "    lines = [ln for ln in fh if not ln.startswith(\"#\")]\n"
          "header = lines[0].strip().split(\",\")\n"
          "data = np.loadtxt(lines[1:], delimiter=\",\", ndmin=2)\n"
          "fig, ax = plt.subplots(figsize=(7, 4.5))\n"
          "for c in range(1, len(header)):\n"
          "    ax.plot(data[:, 0], data[:, c], label=header[c])\n"
          "ax.set_xlabel(header[0])\n"
          "ax.set_title(TITLE, fontsize=9)\n"
          "ax.legend(fontsize=8)\n"
          "fig.tight_layout()\n"
          "fig.savefig(sys.argv[1] if len(sys.argv) > 1 else CSV.rsplit(\".\", 1)[0] + \".png\", dpi=150)\n";
    return os.str();
}

} // namespace phasediff
