//! Canonical polynomial printer: descending powers, `^` for exponents,
//! explicit `*` between a coefficient and the variable. Everything the
//! printer emits re-parses to an equal polynomial.

use num_traits::Signed;

use polyconj_core::arith::{PrimeField, PrimeFieldElement, Rational, Rationals};
use polyconj_core::numfield::{NumberField, QElem, QuotientField};
use polyconj_core::poly::Poly;

/// A coefficient prepared for printing: an optional sign to hoist into
/// the term separator and the magnitude text (`None` meaning 1, so the
/// coefficient can be dropped before a variable power).
struct RenderedCoeff {
    negative: bool,
    body: Option<String>,
}

fn render_rational(r: &Rational) -> RenderedCoeff {
    let negative = r.numer().is_negative();
    let mag = r.abs();
    let body = (mag != Rational::one()).then(|| mag.to_string());
    RenderedCoeff { negative, body }
}

fn render_fp(e: &PrimeFieldElement) -> RenderedCoeff {
    RenderedCoeff { negative: false, body: (e.residue() != 1).then(|| e.residue().to_string()) }
}

/// Renders an extension-field coefficient. A constant falls back to the
/// base rendering, a single power-basis term becomes `c*g^k`, and
/// anything longer is parenthesized in full.
fn render_qelem<F, R>(e: &QElem<F::Elem>, render_base: &R, elem_string: &str) -> RenderedCoeff
where
    F: polyconj_core::arith::Field,
    R: Fn(&F::Elem) -> RenderedCoeff,
{
    let nonzero: Vec<usize> = e
        .coords()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| (!is_base_zero::<F, R>(c, render_base)).then_some(i))
        .collect();
    match nonzero.as_slice() {
        [] => RenderedCoeff { negative: false, body: Some("0".into()) },
        [0] => render_base(&e.coords()[0]),
        [k] => {
            let base = render_base(&e.coords()[*k]);
            let gen_part = if *k == 1 { "g".to_string() } else { format!("g^{k}") };
            let body = match base.body {
                Some(text) => format!("{text}*{gen_part}"),
                None => gen_part,
            };
            RenderedCoeff { negative: base.negative, body: Some(body) }
        }
        _ => RenderedCoeff { negative: false, body: Some(format!("({elem_string})")) },
    }
}

fn is_base_zero<F, R>(c: &F::Elem, render_base: &R) -> bool
where
    F: polyconj_core::arith::Field,
    R: Fn(&F::Elem) -> RenderedCoeff,
{
    let r = render_base(c);
    !r.negative && r.body.as_deref() == Some("0")
}

/// Assembles terms (power, coefficient) in descending power order.
fn assemble(terms: Vec<(usize, RenderedCoeff)>, var: &str) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (power, coeff)) in terms.into_iter().enumerate() {
        if i == 0 {
            if coeff.negative {
                out.push('-');
            }
        } else if coeff.negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let var_part = match power {
            0 => None,
            1 => Some(var.to_string()),
            k => Some(format!("{var}^{k}")),
        };
        match (coeff.body, var_part) {
            (Some(c), Some(v)) => {
                out.push_str(&c);
                out.push('*');
                out.push_str(&v);
            }
            (Some(c), None) => out.push_str(&c),
            (None, Some(v)) => out.push_str(&v),
            (None, None) => out.push('1'),
        }
    }
    out
}

fn descending_nonzero<E>(p: &Poly<E>, is_zero: impl Fn(&E) -> bool) -> Vec<(usize, &E)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !is_zero(c))
        .collect()
}

/// Rational polynomial in the canonical text form.
pub fn q_poly_string(p: &Poly<Rational>, var: &str) -> String {
    let terms = descending_nonzero(p, |c| c.is_zero())
        .into_iter()
        .map(|(k, c)| (k, render_rational(c)))
        .collect();
    assemble(terms, var)
}

/// Prime-field polynomial; residues print in `[0, p)`, so no minus signs.
pub fn fp_poly_string(p: &Poly<PrimeFieldElement>, var: &str) -> String {
    let terms = descending_nonzero(p, |c| c.residue() == 0)
        .into_iter()
        .map(|(k, c)| (k, render_fp(c)))
        .collect();
    assemble(terms, var)
}

/// Number-field element, written as a polynomial in the generator `g`.
pub fn nf_elem_string(field: &NumberField, e: &QElem<Rational>) -> String {
    let coord_poly = field.to_poly(e);
    q_poly_string(&coord_poly, "g")
}

/// Element of an extension of a prime field, in the generator `g`.
pub fn fp_elem_string(field: &QuotientField<PrimeField>, e: &QElem<PrimeFieldElement>) -> String {
    let coord_poly = field.to_poly(e);
    fp_poly_string(&coord_poly, "g")
}

/// Polynomial over a number field; composite coefficients are
/// parenthesized expressions in `g`.
pub fn nf_poly_string(field: &NumberField, p: &Poly<QElem<Rational>>, var: &str) -> String {
    let terms = descending_nonzero(p, |c| c.coords().iter().all(|x| x.is_zero()))
        .into_iter()
        .map(|(k, c)| {
            (k, render_qelem::<Rationals, _>(c, &render_rational, &nf_elem_string(field, c)))
        })
        .collect();
    assemble(terms, var)
}

/// Polynomial over an extension of a prime field.
pub fn fp_ext_poly_string(
    field: &QuotientField<PrimeField>,
    p: &Poly<QElem<PrimeFieldElement>>,
    var: &str,
) -> String {
    let terms = descending_nonzero(p, |c| c.coords().iter().all(|x| x.residue() == 0))
        .into_iter()
        .map(|(k, c)| {
            (k, render_qelem::<PrimeField, _>(c, &render_fp, &fp_elem_string(field, c)))
        })
        .collect();
    assemble(terms, var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::PolyParser;
    use polyconj_core::arith::Field;
    use polyconj_core::poly;

    const QQ: Rationals = Rationals;

    #[test]
    fn canonical_forms() {
        let p = poly::from_i64(&QQ, &[7, -1, 0, 0, 0]);
        assert_eq!(q_poly_string(&p, "x"), "-x + 7");
        let p = poly::from_i64(&QQ, &[1, 0, 1]);
        assert_eq!(q_poly_string(&p, "x"), "x^2 + 1");
        let p = poly::scale(
            &QQ,
            &poly::from_i64(&QQ, &[0, 0, 0, 0, 1]),
            &Rational::from_pair(3, 2),
        );
        let p = poly::add(&QQ, &p, &poly::from_i64(&QQ, &[7, -1]));
        assert_eq!(q_poly_string(&p, "x"), "3/2*x^4 - x + 7");
        assert_eq!(q_poly_string(&Poly::zero(), "x"), "0");
        assert_eq!(q_poly_string(&poly::from_i64(&QQ, &[-1]), "x"), "-1");
    }

    #[test]
    fn printed_form_reparses() {
        let parser = PolyParser::new(&QQ, None);
        for coeffs in [
            vec![1, 0, 1],
            vec![-2, 3, 0, 5],
            vec![0, -1],
            vec![42],
            vec![],
        ] {
            let p = poly::from_i64(&QQ, &coeffs);
            let text = q_poly_string(&p, "x");
            assert_eq!(parser.parse(&text).unwrap(), p, "text: {text}");
        }
    }

    #[test]
    fn nf_coefficients_parenthesized_and_reparse() {
        let k = NumberField::new(poly::from_i64(&QQ, &[1, 0, 1]), 0).unwrap();
        let i = k.generator();
        // (g + 1)*x^2 - g
        let c = k.add(&i, &k.one());
        let p = poly::from_coeffs(&k, vec![k.neg(&i), k.zero(), c]);
        let text = nf_poly_string(&k, &p, "x");
        assert_eq!(text, "(g + 1)*x^2 - g");
        let parser = PolyParser::new(&k, Some(k.generator()));
        assert_eq!(parser.parse(&text).unwrap(), p);
    }

    #[test]
    fn fp_printing() {
        let f5 = PrimeField::new(5).unwrap();
        let p = poly::from_i64(&f5, &[4, 0, 1]);
        assert_eq!(fp_poly_string(&p, "x"), "x^2 + 4");
    }
}
