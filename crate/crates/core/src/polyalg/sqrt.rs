use super::Poly2;
use crate::error::{Error, Result};

/// Square root over `Q` with positive leading coefficient.
///
/// Terms of the root are found from the top down: after matching `q_k`, the leading
/// term of `p - q_k^2` must equal twice the leading term of the root times the next
/// term. Candidate terms decrease strictly in the graded order, so the loop is finite.
pub fn poly_sqrt(p: &Poly2) -> Result<Poly2> {
    let not_square = || Error::NotASquare(p.to_string());
    let Some((lm, lc)) = p.leading() else {
        return Ok(Poly2::zero());
    };
    if lm.e1 % 2 != 0 || lm.e2 % 2 != 0 {
        return Err(not_square());
    }
    let s = lc.sqrt_exact().ok_or_else(not_square)?;
    let lead = super::Monomial::new(lm.e1 / 2, lm.e2 / 2);
    let two_s = &s + &s;
    let mut root = Poly2::term(s, lead);
    let mut last = lead;
    loop {
        let r = p - &(&root * &root);
        let Some((rm, rc)) = r.leading() else {
            return Ok(root);
        };
        let next = rm.checked_div(lead).ok_or_else(not_square)?;
        if next >= last {
            return Err(not_square());
        }
        let coeff = rc.checked_div(&two_s).expect("nonzero leading coefficient");
        root.add_term(next, coeff);
        last = next;
    }
}

/// True when `p` is the square of a polynomial over `Q`.
pub fn is_square(p: &Poly2) -> bool {
    poly_sqrt(p).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(poly_sqrt(&p("z1^2")).unwrap(), p("z1"));
        assert_eq!(
            poly_sqrt(&p("z1^2 + 2*z1*z2 + z2^2")).unwrap(),
            p("z1 + z2")
        );
        assert!(matches!(poly_sqrt(&p("z1*z2")), Err(Error::NotASquare(_))));
    }

    #[test]
    fn sign_and_constants() {
        assert_eq!(poly_sqrt(&p("z1^2 - 2*z1 + 1")).unwrap(), p("z1 - 1"));
        assert_eq!(poly_sqrt(&p("9/4")).unwrap(), p("3/2"));
        assert!(poly_sqrt(&p("-1")).is_err());
        assert!(poly_sqrt(&p("2*z1^2")).is_err());
        assert!(poly_sqrt(&p("z1^2 + 1")).is_err());
        assert_eq!(poly_sqrt(&Poly2::zero()).unwrap(), Poly2::zero());
    }
}
