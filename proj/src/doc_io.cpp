#include "schouten/doc_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace schouten {

bool StructureDoc::operator==(const StructureDoc& o) const {
    if (kind != o.kind || chart != o.chart)
        return false;
    auto same_j = [](const std::optional<JacobiAlgebroid>& a,
                     const std::optional<JacobiAlgebroid>& b) {
        if (a.has_value() != b.has_value())
            return false;
        if (!a)
            return true;
        return a->algebroid == b->algebroid && a->cocycle == b->cocycle;
    };
    if (!same_j(primal, o.primal) || !same_j(dual, o.dual))
        return false;
    if (tensor.has_value() != o.tensor.has_value())
        return false;
    if (tensor && !(*tensor == *o.tensor))
        return false;
    if (first_order.has_value() != o.first_order.has_value())
        return false;
    if (first_order && !(*first_order == *o.first_order))
        return false;
    if (multilinear.has_value() != o.multilinear.has_value())
        return false;
    if (multilinear && !(*multilinear == *o.multilinear))
        return false;
    return true;
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
        ++n;
        if (auto h = raw.find('#'); h != std::string::npos)
            raw = raw.substr(0, h);
        std::istringstream ls(raw);
        Line line{n, {}};
        std::string tok;
        while (ls >> tok)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

// "a = b c d" lines arrive tokenized; joins everything after '=' into one
// scalar text (scalars may contain spaces around +/-).
std::string join_after_eq(const Line& line, size_t eq_pos) {
    std::string out;
    for (size_t i = eq_pos + 1; i < line.tokens.size(); ++i) {
        if (!out.empty())
            out += " ";
        out += line.tokens[i];
    }
    if (out.empty())
        fail(line.number, "expected a value after '='");
    return out;
}

size_t find_eq(const Line& line) {
    for (size_t i = 0; i < line.tokens.size(); ++i)
        if (line.tokens[i] == "=")
            return i;
    fail(line.number, "expected '='");
}

struct DocParser {
    std::vector<Line> lines;
    size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    const Line& peek() const { return lines[pos]; }
    Line take() { return lines[pos++]; }

    Chart parse_chart() {
        if (done() || peek().tokens[0] != "chart")
            fail(done() ? 0 : peek().number, "expected 'chart' block");
        take();
        std::vector<std::string> base, fiber, aux;
        std::optional<std::string> exp;
        while (!done() && peek().tokens[0] != "end") {
            Line l = take();
            const std::string& key = l.tokens[0];
            if (key == "base")
                base.assign(l.tokens.begin() + 1, l.tokens.end());
            else if (key == "fiber")
                fiber.assign(l.tokens.begin() + 1, l.tokens.end());
            else if (key == "aux") {
                std::vector<std::string> names(l.tokens.begin() + 1, l.tokens.end());
                if (!names.empty() && names.back() == "exp") {
                    names.pop_back();
                    if (names.empty())
                        fail(l.number, "'exp' flag needs a preceding coordinate");
                    exp = names.back();
                }
                aux = std::move(names);
            } else {
                fail(l.number, "unknown chart entry '" + key + "'");
            }
        }
        if (done())
            fail(lines.back().number, "unterminated chart block");
        take(); // end
        try {
            return Chart::make(base, fiber, aux, exp);
        } catch (const InputError& e) {
            fail(pos > 0 ? lines[pos - 1].number : 0, e.what());
        }
    }

    static int frame_index(const Line& l, const std::vector<std::string>& frames,
                           const std::string& name) {
        auto it = std::find(frames.begin(), frames.end(), name);
        if (it == frames.end())
            fail(l.number, "unknown frame '" + name + "'");
        return int(it - frames.begin());
    }

    JacobiAlgebroid parse_structure(const Chart& chart, bool allow_cocycle,
                                    const std::string& block_name) {
        if (done() || peek().tokens[0] != block_name)
            fail(done() ? 0 : peek().number, "expected '" + block_name + "' block");
        take();
        std::vector<std::string> frames, anchor_coords;
        std::vector<Line> anchor_lines, c_lines, cocycle_lines;
        while (!done() && peek().tokens[0] != "end") {
            Line l = take();
            const std::string& key = l.tokens[0];
            if (key == "frames")
                frames.assign(l.tokens.begin() + 1, l.tokens.end());
            else if (key == "anchor-coords")
                anchor_coords.assign(l.tokens.begin() + 1, l.tokens.end());
            else if (key == "anchor")
                anchor_lines.push_back(std::move(l));
            else if (key == "c")
                c_lines.push_back(std::move(l));
            else if (key == "cocycle" && allow_cocycle)
                cocycle_lines.push_back(std::move(l));
            else
                fail(l.number, "unknown structure entry '" + key + "'");
        }
        if (done())
            fail(lines.back().number, "unterminated structure block");
        take(); // end
        if (frames.empty())
            fail(lines[pos - 1].number, "structure block needs a 'frames' line");
        if (anchor_coords.empty()) {
            anchor_coords = chart.base_coords();
            anchor_coords.insert(anchor_coords.end(), chart.fiber_coords().begin(),
                                 chart.fiber_coords().end());
        }
        std::vector<std::vector<Scalar>> anchor(
            frames.size(), std::vector<Scalar>(anchor_coords.size(), Scalar::zero(chart)));
        for (const Line& l : anchor_lines) {
            // anchor <frame> <coord> = <scalar>
            if (l.tokens.size() < 5)
                fail(l.number, "anchor line needs: anchor <frame> <coord> = <scalar>");
            int fi = frame_index(l, frames, l.tokens[1]);
            auto cit = std::find(anchor_coords.begin(), anchor_coords.end(), l.tokens[2]);
            if (cit == anchor_coords.end())
                fail(l.number, "unknown anchor coordinate '" + l.tokens[2] + "'");
            size_t eq = find_eq(l);
            try {
                anchor[size_t(fi)][size_t(cit - anchor_coords.begin())] =
                    Scalar::parse(chart, join_after_eq(l, eq));
            } catch (const InputError& e) {
                fail(l.number, e.what());
            }
        }
        std::map<std::tuple<int, int, int>, Scalar> c;
        for (const Line& l : c_lines) {
            // c <frame_i> <frame_j> <frame_k> = <scalar>, i<j
            if (l.tokens.size() < 6)
                fail(l.number, "c line needs: c <e_i> <e_j> <e_k> = <scalar>");
            int i = frame_index(l, frames, l.tokens[1]);
            int j = frame_index(l, frames, l.tokens[2]);
            int k = frame_index(l, frames, l.tokens[3]);
            if (i >= j)
                fail(l.number, "structure functions are stored for i<j (frame order)");
            size_t eq = find_eq(l);
            try {
                c[{i, j, k}] = Scalar::parse(chart, join_after_eq(l, eq));
            } catch (const InputError& e) {
                fail(l.number, e.what());
            }
        }
        AlgebroidSpec spec;
        try {
            spec = AlgebroidSpec(chart, frames, anchor_coords, std::move(anchor), c);
        } catch (const InputError& e) {
            fail(lines[pos - 1].number, e.what());
        }
        GrassmannElement cocycle(chart, spec.form_gens());
        for (const Line& l : cocycle_lines) {
            // cocycle <frame> = <scalar>
            if (l.tokens.size() < 4)
                fail(l.number, "cocycle line needs: cocycle <frame> = <scalar>");
            int fi = frame_index(l, frames, l.tokens[1]);
            size_t eq = find_eq(l);
            try {
                cocycle.add_term({fi}, Scalar::parse(chart, join_after_eq(l, eq)));
            } catch (const InputError& e) {
                fail(l.number, e.what());
            }
        }
        return JacobiAlgebroid::make_unchecked(std::move(spec), std::move(cocycle));
    }

    MultiIndex parse_mono(const Line& l, const std::string& tok, const GenList& gens) {
        MultiIndex idx;
        if (tok == "1")
            return idx;
        std::istringstream ss(tok);
        std::string part;
        while (std::getline(ss, part, '^')) {
            auto it = std::find(gens.names().begin(), gens.names().end(), part);
            if (it == gens.names().end())
                fail(l.number, "unknown generator '" + part + "'");
            idx.push_back(int(it - gens.names().begin()));
        }
        for (size_t i = 1; i < idx.size(); ++i)
            if (idx[i] <= idx[i - 1])
                fail(l.number, "generators must be strictly increasing in a term");
        return idx;
    }
};

std::string mono_text(const GenList& gens, const MultiIndex& idx) {
    if (idx.empty())
        return "1";
    std::string out;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i)
            out += "^";
        out += gens.name(idx[i]);
    }
    return out;
}

void print_chart(std::ostream& os, const Chart& chart) {
    os << "chart\n";
    auto row = [&](const char* key, const std::vector<std::string>& names) {
        if (names.empty())
            return;
        os << "  " << key;
        for (const auto& n : names)
            os << " " << n;
        os << "\n";
    };
    row("base", chart.base_coords());
    row("fiber", chart.fiber_coords());
    if (!chart.aux_coords().empty()) {
        os << "  aux";
        for (const auto& n : chart.aux_coords())
            os << " " << n;
        if (chart.exp_coord())
            os << " exp";
        os << "\n";
    }
    os << "end\n";
}

void print_structure(std::ostream& os, const JacobiAlgebroid& J, const std::string& block_name) {
    const AlgebroidSpec& A = J.algebroid;
    os << block_name << "\n";
    os << "  frames";
    for (const auto& f : A.frames())
        os << " " << f;
    os << "\n";
    std::vector<std::string> default_coords = A.chart().base_coords();
    default_coords.insert(default_coords.end(), A.chart().fiber_coords().begin(),
                          A.chart().fiber_coords().end());
    if (A.anchor_coords() != default_coords) {
        os << "  anchor-coords";
        for (const auto& c : A.anchor_coords())
            os << " " << c;
        os << "\n";
    }
    for (int i = 0; i < A.rank(); ++i)
        for (size_t m = 0; m < A.anchor_coords().size(); ++m)
            if (!A.anchor_entry(i, int(m)).is_zero())
                os << "  anchor " << A.frames()[size_t(i)] << " " << A.anchor_coords()[m]
                   << " = " << A.anchor_entry(i, int(m)).str() << "\n";
    for (int i = 0; i < A.rank(); ++i)
        for (int j = i + 1; j < A.rank(); ++j)
            for (int k = 0; k < A.rank(); ++k)
                if (!A.structure_fn(k, i, j).is_zero())
                    os << "  c " << A.frames()[size_t(i)] << " " << A.frames()[size_t(j)] << " "
                       << A.frames()[size_t(k)] << " = " << A.structure_fn(k, i, j).str()
                       << "\n";
    for (const auto& [idx, c] : J.cocycle.terms())
        os << "  cocycle " << A.frames()[size_t(idx[0])] << " = " << c.str() << "\n";
    os << "end\n";
}

void print_terms(std::ostream& os, const char* key, const GenList& gens,
                 const GrassmannElement& e) {
    for (const auto& [idx, c] : e.terms())
        os << key << " " << mono_text(gens, idx) << " = " << c.str() << "\n";
}

} // namespace

StructureDoc parse_doc(const std::string& text) {
    DocParser p{tokenize(text)};
    if (p.done())
        throw InputError("empty document");
    Line head = p.take();
    if (head.tokens[0] != "doc" || head.tokens.size() != 2)
        fail(head.number, "document must start with 'doc <kind>'");
    const std::string& kind = head.tokens[1];
    StructureDoc doc;

    if (kind == "multilinear") {
        doc.kind = StructureDoc::Kind::Multilinear;
        int dim = -1, degree = -2;
        std::vector<Line> entries;
        while (!p.done()) {
            Line l = p.take();
            const std::string& key = l.tokens[0];
            if (key == "dim" && l.tokens.size() == 2)
                dim = std::stoi(l.tokens[1]);
            else if (key == "degree" && l.tokens.size() == 2)
                degree = std::stoi(l.tokens[1]);
            else if (key == "entry")
                entries.push_back(std::move(l));
            else
                fail(l.number, "unknown multilinear entry '" + key + "'");
        }
        if (dim <= 0 || degree < -1)
            throw InputError("multilinear document needs 'dim' and 'degree'");
        MultilinearOp op = MultilinearOp::zero(dim, degree);
        for (const Line& l : entries) {
            // entry <out> <in...> = <rational>
            size_t eq = find_eq(l);
            if (int(eq) != degree + 3)
                fail(l.number, "entry needs " + std::to_string(degree + 2) + " indices");
            std::vector<int> ins;
            int out = std::stoi(l.tokens[1]);
            for (size_t i = 2; i < eq; ++i)
                ins.push_back(std::stoi(l.tokens[i]));
            for (int ix : ins)
                if (ix < 0 || ix >= dim)
                    fail(l.number, "index out of range");
            if (out < 0 || out >= dim)
                fail(l.number, "index out of range");
            op.at(out, ins) = Rational(join_after_eq(l, eq));
        }
        doc.multilinear = std::move(op);
        return doc;
    }

    doc.chart = p.parse_chart();

    if (kind == "algebroid" || kind == "jacobi-algebroid") {
        doc.kind = kind == "algebroid" ? StructureDoc::Kind::Algebroid
                                       : StructureDoc::Kind::JacobiAlgebroid;
        doc.primal = p.parse_structure(doc.chart, kind == "jacobi-algebroid", "structure");
        if (!p.done())
            fail(p.peek().number, "trailing content");
        return doc;
    }
    if (kind == "dual-pair") {
        doc.kind = StructureDoc::Kind::DualPair;
        doc.primal = p.parse_structure(doc.chart, true, "primal");
        doc.dual = p.parse_structure(doc.chart, true, "dual");
        if (!p.done())
            fail(p.peek().number, "trailing content");
        return doc;
    }
    if (kind == "tensor" || kind == "first-order-op") {
        std::vector<std::string> gen_names;
        std::string space = "section";
        int degree = -1;
        std::vector<Line> term_lines;
        while (!p.done()) {
            Line l = p.take();
            const std::string& key = l.tokens[0];
            if (key == "space" && l.tokens.size() == 2)
                space = l.tokens[1];
            else if (key == "generators")
                gen_names.assign(l.tokens.begin() + 1, l.tokens.end());
            else if (key == "degree" && l.tokens.size() == 2)
                degree = std::stoi(l.tokens[1]);
            else if (key == "term" || key == "part1" || key == "part2")
                term_lines.push_back(std::move(l));
            else
                fail(l.number, "unknown entry '" + key + "'");
        }
        if (gen_names.empty())
            throw InputError("document needs a 'generators' line");
        if (space != "section" && space != "form")
            throw InputError("space must be 'section' or 'form'");
        doc.op_gens = GenList(space == "section" ? GenSpace::Section : GenSpace::Form,
                              gen_names);
        if (kind == "tensor") {
            doc.kind = StructureDoc::Kind::Tensor;
            GrassmannElement e(doc.chart, doc.op_gens);
            for (const Line& l : term_lines) {
                if (l.tokens[0] != "term")
                    fail(l.number, "tensor documents use 'term' lines");
                size_t eq = find_eq(l);
                if (eq != 2)
                    fail(l.number, "term line needs: term <mono> = <scalar>");
                try {
                    e.add_term(p.parse_mono(l, l.tokens[1], doc.op_gens),
                               Scalar::parse(doc.chart, join_after_eq(l, eq)));
                } catch (const InputError& err) {
                    fail(l.number, err.what());
                }
            }
            if (degree >= 0 && !e.is_zero() && e.tensor_degree() != degree)
                throw InputError("tensor degree line disagrees with the terms");
            doc.tensor = std::move(e);
            return doc;
        }
        doc.kind = StructureDoc::Kind::FirstOrderOp;
        if (degree < -1)
            throw InputError("first-order-op document needs a 'degree' line");
        GrassmannElement a1(doc.chart, doc.op_gens), a2(doc.chart, doc.op_gens);
        for (const Line& l : term_lines) {
            bool is1 = l.tokens[0] == "part1";
            if (!is1 && l.tokens[0] != "part2")
                fail(l.number, "first-order-op documents use part1/part2 lines");
            size_t eq = find_eq(l);
            if (eq != 2)
                fail(l.number, "part line needs: partN <mono> = <scalar>");
            try {
                (is1 ? a1 : a2).add_term(p.parse_mono(l, l.tokens[1], doc.op_gens),
                                         Scalar::parse(doc.chart, join_after_eq(l, eq)));
            } catch (const InputError& err) {
                fail(l.number, err.what());
            }
        }
        try {
            doc.first_order = FirstOrderOp::make(degree, std::move(a1), std::move(a2));
        } catch (const InputError& err) {
            throw InputError(std::string("first-order-op: ") + err.what());
        }
        return doc;
    }
    fail(head.number, "unknown document kind '" + kind + "'");
}

std::string print_doc(const StructureDoc& doc) {
    std::ostringstream os;
    switch (doc.kind) {
    case StructureDoc::Kind::Multilinear: {
        const MultilinearOp& op = *doc.multilinear;
        os << "doc multilinear\n";
        os << "dim " << op.dim() << "\n";
        os << "degree " << op.degree() << "\n";
        const int arity = op.arity();
        std::vector<int> ins(size_t(std::max(arity, 0)), 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == arity) {
                for (int out = 0; out < op.dim(); ++out) {
                    const Rational& v = op.at(out, ins);
                    if (v == 0)
                        continue;
                    os << "entry " << out;
                    for (int i : ins)
                        os << " " << i;
                    os << " = " << to_string(v) << "\n";
                }
                return;
            }
            for (int i = 0; i < op.dim(); ++i) {
                ins[size_t(pos)] = i;
                rec(pos + 1);
            }
        };
        rec(0);
        return os.str();
    }
    case StructureDoc::Kind::Algebroid:
    case StructureDoc::Kind::JacobiAlgebroid:
        os << "doc "
           << (doc.kind == StructureDoc::Kind::Algebroid ? "algebroid" : "jacobi-algebroid")
           << "\n";
        print_chart(os, doc.chart);
        print_structure(os, *doc.primal, "structure");
        return os.str();
    case StructureDoc::Kind::DualPair:
        os << "doc dual-pair\n";
        print_chart(os, doc.chart);
        print_structure(os, *doc.primal, "primal");
        print_structure(os, *doc.dual, "dual");
        return os.str();
    case StructureDoc::Kind::Tensor: {
        os << "doc tensor\n";
        print_chart(os, doc.chart);
        os << "space " << (doc.op_gens.space() == GenSpace::Section ? "section" : "form")
           << "\n";
        os << "generators";
        for (const auto& n : doc.op_gens.names())
            os << " " << n;
        os << "\n";
        if (!doc.tensor->is_zero())
            os << "degree " << doc.tensor->tensor_degree() << "\n";
        print_terms(os, "term", doc.op_gens, *doc.tensor);
        return os.str();
    }
    case StructureDoc::Kind::FirstOrderOp: {
        os << "doc first-order-op\n";
        print_chart(os, doc.chart);
        os << "space " << (doc.op_gens.space() == GenSpace::Section ? "section" : "form")
           << "\n";
        os << "generators";
        for (const auto& n : doc.op_gens.names())
            os << " " << n;
        os << "\n";
        os << "degree " << doc.first_order->degree << "\n";
        print_terms(os, "part1", doc.op_gens, doc.first_order->part1);
        print_terms(os, "part2", doc.op_gens, doc.first_order->part2);
        return os.str();
    }
    }
    throw InputError("unprintable document");
}

StructureDoc load_doc_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_doc(ss.str());
}

void save_doc_file(const std::string& path, const StructureDoc& doc) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << print_doc(doc);
}

StructureDoc doc_from_algebroid(const AlgebroidSpec& A) {
    StructureDoc d;
    d.kind = StructureDoc::Kind::Algebroid;
    d.chart = A.chart();
    d.primal = JacobiAlgebroid::make_unchecked(A, GrassmannElement());
    return d;
}

StructureDoc doc_from_jacobi(const JacobiAlgebroid& J) {
    StructureDoc d;
    d.kind = StructureDoc::Kind::JacobiAlgebroid;
    d.chart = J.algebroid.chart();
    d.primal = J;
    return d;
}

StructureDoc doc_from_tensor(const GrassmannElement& e) {
    StructureDoc d;
    d.kind = StructureDoc::Kind::Tensor;
    d.chart = e.chart();
    d.op_gens = e.gens();
    d.tensor = e;
    return d;
}

StructureDoc doc_from_first_order(const FirstOrderOp& op, const Chart& chart,
                                  const GenList& gens) {
    StructureDoc d;
    d.kind = StructureDoc::Kind::FirstOrderOp;
    d.chart = chart;
    d.op_gens = gens;
    d.first_order = op;
    return d;
}

StructureDoc doc_from_dual_pair(const JacobiAlgebroid& primal, const JacobiAlgebroid& dual) {
    StructureDoc d;
    d.kind = StructureDoc::Kind::DualPair;
    d.chart = primal.algebroid.chart();
    d.primal = primal;
    d.dual = dual;
    return d;
}

StructureDoc doc_from_multilinear(const MultilinearOp& op) {
    StructureDoc d;
    d.kind = StructureDoc::Kind::Multilinear;
    d.multilinear = op;
    return d;
}

} // namespace schouten
