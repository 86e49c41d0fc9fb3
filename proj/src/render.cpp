#include "klmasks/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klmasks {

std::string render_ascii(const Heap& h, const std::vector<char>& marks)
{
    if (static_cast<int>(marks.size()) != h.size())
        throw std::invalid_argument("one mark per heap entry expected");
    int top = 0;
    for (int l : h.level)
        top = std::max(top, l);
    int width = std::max(h.n - 1, 1);
    std::vector<std::string> rows(top + 1, std::string(2 * width - 1, ' '));
    for (auto& r : rows)
        for (int c = 0; c < width; ++c)
            r[2 * c] = '.';
    for (int j = 0; j < h.size(); ++j)
        rows[top - h.level[j]][2 * (h.col(j) - 1)] = marks[j];
    std::string out;
    for (const auto& r : rows)
        out += r + "\n";
    return out;
}

std::string render_heap_ascii(const Heap& h) { return render_ascii(h, std::vector<char>(h.size(), '*')); }

std::string render_mask_ascii(const Mask& m)
{
    DefectProfile d = defect_profile(m);
    std::vector<char> marks;
    for (EntryKind k : d.kind)
        marks.push_back(entry_char(k));
    return render_ascii(build_heap(m.n, m.word), marks);
}

namespace {

constexpr int kStep = 40;

struct Canvas {
    const Heap& h;
    int top = 0;
    explicit Canvas(const Heap& heap) : h(heap)
    {
        for (int l : h.level)
            top = std::max(top, l);
    }
    int x_col(double c) const { return static_cast<int>(kStep * c); }
    int y_level(int l) const { return kStep * (top - l + 1); }
    int width() const { return kStep * (h.n + 1); }
    int height() const { return kStep * (top + 3); }
};

std::string svg(const Heap& h, const Mask* m)
{
    Canvas cv(h);
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cv.width() << "\" height=\"" << cv.height()
      << "\">\n";
    if (m) {
        StringDiagram sd = strings(h, m->bits);
        // Strand at position i runs halfway between columns i-1 and i.
        for (int label = 1; label <= h.n; ++label) {
            s << "  <polyline fill=\"none\" stroke=\"#4a6fa5\" stroke-width=\"1.5\" points=\"";
            int pos = label;
            s << cv.x_col(pos - 0.5) << "," << 0;
            for (int j = 0; j < h.size(); ++j) {
                if (sd.nw[j] != label && sd.ne[j] != label)
                    continue;
                s << " " << cv.x_col(h.col(j)) << "," << cv.y_level(h.level[j]);
                pos = sd.sw[j] == label ? h.col(j) : h.col(j) + 1;
            }
            s << " " << cv.x_col(pos - 0.5) << "," << cv.height() << "\"/>\n";
        }
    }
    std::vector<char> marks(h.size(), ' ');
    if (m) {
        DefectProfile d = defect_profile(*m);
        for (int j = 0; j < h.size(); ++j)
            marks[j] = entry_char(d.kind[j]);
    }
    for (int j = 0; j < h.size(); ++j) {
        int x = cv.x_col(h.col(j)), y = cv.y_level(h.level[j]);
        s << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"black\"/>\n";
        if (m)
            s << "  <text x=\"" << x + 7 << "\" y=\"" << y - 7 << "\" font-size=\"12\">" << marks[j] << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace

std::string render_heap_svg(const Heap& h) { return svg(h, nullptr); }

std::string render_mask_svg(const Mask& m)
{
    Heap h = build_heap(m.n, m.word);
    return svg(h, &m);
}

}  // namespace klmasks
