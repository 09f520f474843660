use super::{BoxFormula, Formula, RIFormula};

/// How much sugar the printer puts back.
///
/// `Plain` restores only the Boolean abbreviations (`false`, `|`, `->`,
/// `<->`). `Sugared` additionally prints `~o φ` as `bullet φ` and
/// `~box ~φ` as `dia φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrintStyle {
    #[default]
    Plain,
    Sugared,
}

pub fn print_box(f: &BoxFormula, style: PrintStyle) -> String {
    render(f, style).text
}

pub fn print_ri(f: &RIFormula, style: PrintStyle) -> String {
    render(f, style).text
}

struct Rendered {
    text: String,
    kind: Kind,
}

#[derive(PartialEq)]
enum Kind {
    Atom,
    Prefix,
    Binary,
}

/// Printer view over one node of either AST.
trait Printable: Formula {
    fn view(&self) -> View<'_, Self>;
}

enum View<'a, F> {
    Top,
    Var(&'a str),
    Neg(&'a F),
    And(&'a F, &'a F),
    /// Modal prefix operator with its keyword.
    Modal(&'static str, &'a F),
}

impl Printable for BoxFormula {
    fn view(&self) -> View<'_, Self> {
        match self {
            BoxFormula::Top => View::Top,
            BoxFormula::Var(v) => View::Var(v),
            BoxFormula::Neg(a) => View::Neg(a),
            BoxFormula::And(a, b) => View::And(a, b),
            BoxFormula::Box(a) => View::Modal("box", a),
        }
    }
}

impl Printable for RIFormula {
    fn view(&self) -> View<'_, Self> {
        match self {
            RIFormula::Top => View::Top,
            RIFormula::Var(v) => View::Var(v),
            RIFormula::Neg(a) => View::Neg(a),
            RIFormula::And(a, b) => View::And(a, b),
            RIFormula::Circ(a) => View::Modal("o", a),
            RIFormula::Star(a) => View::Modal("star", a),
        }
    }
}

fn atom(text: impl Into<String>) -> Rendered {
    Rendered {
        text: text.into(),
        kind: Kind::Atom,
    }
}

fn prefix<F: Printable>(op: &str, arg: &F, style: PrintStyle) -> Rendered {
    let inner = render(arg, style);
    // Negation takes only atoms bare; modal operators also take prefix terms.
    let text = match (inner.kind, op) {
        (Kind::Atom, "~") => format!("~{}", inner.text),
        (Kind::Atom | Kind::Prefix, op) if op != "~" => format!("{op} {}", inner.text),
        (_, "~") => format!("~({})", inner.text),
        (_, _) => format!("{op} ({})", inner.text),
    };
    Rendered {
        text,
        kind: Kind::Prefix,
    }
}

fn binary<F: Printable>(lhs: &F, op: &str, rhs: &F, style: PrintStyle) -> Rendered {
    let wrap = |r: Rendered| match r.kind {
        Kind::Binary => format!("({})", r.text),
        _ => r.text,
    };
    let text = format!("{} {op} {}", wrap(render(lhs, style)), wrap(render(rhs, style)));
    Rendered {
        text,
        kind: Kind::Binary,
    }
}

fn bullet_like<F: Printable>(f: &F, style: PrintStyle) -> bool {
    style == PrintStyle::Sugared && matches!(f.view(), View::Modal("o", _))
}

fn render<F: Printable>(f: &F, style: PrintStyle) -> Rendered {
    if let View::And(l, r) = f.view() {
        if let (Some((a, b)), Some((b2, a2))) = (l.as_implication(), r.as_implication()) {
            if a == a2 && b == b2 {
                return binary(a, "<->", b, style);
            }
        }
    }
    match f.view() {
        View::Top => atom("true"),
        View::Var(v) => atom(v),
        View::And(l, r) => binary(l, "&", r, style),
        View::Modal(op, a) => prefix(op, a, style),
        View::Neg(inner) => {
            if let Some((a, c)) = f.as_implication() {
                // `~x -> c` reads better as `x | c` unless `~x` is itself
                // an implication or disjunction, or prints as `bullet`.
                return match a.view() {
                    View::Neg(a1) if a.as_implication().is_none() && !bullet_like(a1, style) => {
                        binary(a1, "|", c, style)
                    }
                    _ => binary(a, "->", c, style),
                };
            }
            match inner.view() {
                View::Top => atom("false"),
                View::Modal("o", a) if style == PrintStyle::Sugared => prefix("bullet", a, style),
                View::Modal("box", b) if style == PrintStyle::Sugared => match b.view() {
                    View::Neg(c) => prefix("dia", c, style),
                    _ => prefix("~", inner, style),
                },
                _ => prefix("~", inner, style),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_box, parse_ri};

    #[test]
    fn plain_printing() {
        let p = || RIFormula::var("p");
        assert_eq!(
            print_box(&BoxFormula::var("p").boxed(), PrintStyle::Plain),
            "box p"
        );
        assert_eq!(print_ri(&p().circ().not(), PrintStyle::Plain), "~(o p)");
        assert_eq!(
            print_ri(&p().and(RIFormula::var("q")), PrintStyle::Plain),
            "p & q"
        );
        assert_eq!(
            print_ri(&p().circ().and(p()).implies(p()), PrintStyle::Plain),
            "(o p & p) -> p"
        );
        assert_eq!(print_ri(&RIFormula::bot(), PrintStyle::Plain), "false");
    }

    #[test]
    fn sugared_printing() {
        let p = RIFormula::var("p");
        assert_eq!(print_ri(&p.clone().bullet(), PrintStyle::Sugared), "bullet p");
        assert_eq!(
            print_box(&BoxFormula::var("p").dia(), PrintStyle::Sugared),
            "dia p"
        );
        assert_eq!(
            print_box(&BoxFormula::var("p").dia(), PrintStyle::Plain),
            "~(box ~p)"
        );
        let b1 = p.clone().bullet().implies(p.clone());
        assert_eq!(print_ri(&b1, PrintStyle::Sugared), "bullet p -> p");
        assert_eq!(print_ri(&b1, PrintStyle::Plain), "o p | p");
    }

    #[test]
    fn derived_connectives_come_back() {
        for text in [
            "p | q",
            "p -> q",
            "p <-> q",
            "(p | q) -> ~q",
            "o (p -> q) -> (o p -> o q)",
        ] {
            assert_eq!(parse_ri(text).unwrap().to_string(), text);
        }
        assert_eq!(parse_box("box (p -> q)").unwrap().to_string(), "box (p -> q)");
    }
}
