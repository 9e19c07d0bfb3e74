//! Parser for net and pencil expressions in the inline ideal notation,
//! e.g. `"ad-bc, ae+bd-c^2, be-cd"`. Variables are `a..e`, adjacent
//! variables multiply implicitly, coefficients are integers or rationals,
//! and every expression must be homogeneous of degree 2.

use num_bigint::BigInt;
use thiserror::Error;

use crate::monomial::{Monomial2, NUM_VARS, VAR_NAMES};
use crate::net::{Net, Pencil};
use crate::quadric::{NetError, QuadraticForm};
use crate::rational::Rat;
use num_traits::Zero;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("term at byte {position} has degree {degree}, every term must be quadratic")]
    Inhomogeneous { position: usize, degree: u32 },
    #[error("expected {expected} comma-separated quadrics, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("the quadrics are linearly dependent: {0}")]
    NotIndependent(NetError),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }
}

/// Parses one quadratic form. Grammar:
/// `expression := term (('+'|'-') term)*`,
/// `term := rational? monomial?`,
/// `monomial := (variable ('^' digits)?)+`.
pub fn parse_quadric(src: &str) -> Result<QuadraticForm, ParseError> {
    let mut lex = Lexer::new(src);
    let mut form = QuadraticForm::zero();
    let mut first = true;
    loop {
        let term_start = lex.pos;
        let sign = match lex.peek() {
            None if first => {
                return Err(ParseError::Syntax {
                    position: lex.pos,
                    message: "empty expression".to_string(),
                })
            }
            None => break,
            Some(b'+') => {
                lex.bump();
                1
            }
            Some(b'-') => {
                lex.bump();
                -1
            }
            Some(_) if first => 1,
            Some(c) => {
                return Err(ParseError::Syntax {
                    position: lex.pos,
                    message: format!("expected '+' or '-', found '{}'", c as char),
                })
            }
        };
        first = false;

        // optional rational coefficient
        let mut coeff = match lex.integer() {
            Some(n) => {
                if lex.peek() == Some(b'/') {
                    lex.bump();
                    let d = lex.integer().ok_or_else(|| ParseError::Syntax {
                        position: lex.pos,
                        message: "expected denominator".to_string(),
                    })?;
                    if d.is_zero() {
                        return Err(ParseError::Syntax {
                            position: lex.pos,
                            message: "zero denominator".to_string(),
                        });
                    }
                    Rat::new(n, d)
                } else {
                    Rat::from_integer(n)
                }
            }
            None => Rat::from_integer(BigInt::from(1)),
        };
        if sign < 0 {
            coeff = -coeff;
        }

        // variables with optional exponents
        let mut exponents = [0u32; NUM_VARS];
        let mut degree = 0u32;
        let mut saw_variable = false;
        while let Some(c) = lex.peek() {
            let Some(var) = VAR_NAMES.iter().position(|v| v.as_bytes()[0] == c) else {
                break;
            };
            lex.bump();
            saw_variable = true;
            let exp = if lex.peek() == Some(b'^') {
                lex.bump();
                let e = lex.integer().ok_or_else(|| ParseError::Syntax {
                    position: lex.pos,
                    message: "expected exponent".to_string(),
                })?;
                u32::try_from(&e).map_err(|_| ParseError::Syntax {
                    position: lex.pos,
                    message: "exponent out of range".to_string(),
                })?
            } else {
                1
            };
            exponents[var] += exp;
            degree += exp;
        }
        if !saw_variable && coeff == Rat::from_integer(BigInt::from(1)) && sign > 0 {
            // neither coefficient nor monomial: stray token
            if let Some(c) = lex.peek() {
                return Err(ParseError::Syntax {
                    position: lex.pos,
                    message: format!("unexpected '{}'", c as char),
                });
            }
        }
        if degree != 2 {
            return Err(ParseError::Inhomogeneous {
                position: term_start,
                degree,
            });
        }
        if !coeff.is_zero() {
            let vars: Vec<usize> = (0..NUM_VARS)
                .flat_map(|i| std::iter::repeat(i).take(exponents[i] as usize))
                .collect();
            let m = Monomial2::from_vars(vars[0], vars[1]);
            let updated = form.coeff(m) + &coeff;
            form.coeffs_mut()[m.index()] = updated;
        }
    }
    Ok(form)
}

fn parse_quadric_list(src: &str, expected: usize) -> Result<Vec<QuadraticForm>, ParseError> {
    let pieces: Vec<&str> = src.split(',').collect();
    if pieces.len() != expected {
        return Err(ParseError::WrongCount {
            expected,
            found: pieces.len(),
        });
    }
    let mut offset = 0;
    let mut forms = Vec::with_capacity(expected);
    for piece in pieces {
        let form = parse_quadric(piece).map_err(|e| shift_error(e, offset))?;
        offset += piece.len() + 1;
        forms.push(form);
    }
    Ok(forms)
}

fn shift_error(e: ParseError, offset: usize) -> ParseError {
    match e {
        ParseError::Syntax { position, message } => ParseError::Syntax {
            position: position + offset,
            message,
        },
        ParseError::Inhomogeneous { position, degree } => ParseError::Inhomogeneous {
            position: position + offset,
            degree,
        },
        other => other,
    }
}

/// Parses three comma-separated quadrics into a net.
pub fn parse_net(src: &str) -> Result<Net, ParseError> {
    let forms = parse_quadric_list(src, 3)?;
    Net::new([forms[0].clone(), forms[1].clone(), forms[2].clone()])
        .map_err(ParseError::NotIndependent)
}

/// Parses two comma-separated quadrics into a pencil.
pub fn parse_pencil(src: &str) -> Result<Pencil, ParseError> {
    let forms = parse_quadric_list(src, 2)?;
    Pencil::new([forms[0].clone(), forms[1].clone()]).map_err(ParseError::NotIndependent)
}

/// Renders a form back into the inline notation.
pub fn quadric_to_string(q: &QuadraticForm) -> String {
    use num_traits::{One, Signed};
    if q.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (m, c) in q.monomials() {
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            out.push_str(&crate::rational::format_rat(&mag));
        }
        out.push_str(&m.name());
    }
    out
}

pub fn net_to_string(net: &Net) -> String {
    net.basis()
        .iter()
        .map(quadric_to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::net_from_named;

    #[test]
    fn parses_named_nets() {
        let ribbon = parse_net("ac-b^2, ae-2bd+c^2, ce-d^2").unwrap();
        let expected = net_from_named(
            &[(1, "ac"), (-1, "b^2")],
            &[(1, "ae"), (-2, "bd"), (1, "c^2")],
            &[(1, "ce"), (-1, "d^2")],
        );
        assert_eq!(ribbon, expected);

        let triple = parse_net("ad-bc, ae+bd-c^2, be-cd").unwrap();
        let expected = net_from_named(
            &[(1, "ad"), (-1, "bc")],
            &[(1, "ae"), (1, "bd"), (-1, "c^2")],
            &[(1, "be"), (-1, "cd")],
        );
        assert_eq!(triple, expected);
    }

    #[test]
    fn rational_coefficients_and_whitespace() {
        let q = parse_quadric(" 1/2 ad - 3 b c + c ^ 2 ").unwrap();
        assert_eq!(*q.coeff(Monomial2::from_vars(0, 3)), crate::rational::ratio(1, 2));
        assert_eq!(*q.coeff(Monomial2::from_vars(1, 2)), crate::rational::rat(-3));
        assert_eq!(*q.coeff(Monomial2::from_vars(2, 2)), crate::rational::rat(1));
    }

    #[test]
    fn dependent_rows_are_rejected() {
        let err = parse_net("ad-bc, 2ad-2bc, be-cd").unwrap_err();
        assert!(matches!(err, ParseError::NotIndependent(_)));
    }

    #[test]
    fn error_positions() {
        let err = parse_quadric("ab + q").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { position: 5, .. }));
        let err = parse_quadric("abc").unwrap_err();
        assert!(matches!(err, ParseError::Inhomogeneous { degree: 3, .. }));
        let err = parse_quadric("ab + 3").unwrap_err();
        assert!(matches!(err, ParseError::Inhomogeneous { degree: 0, .. }));
        let err = parse_net("ad-bc, be-cd").unwrap_err();
        assert!(matches!(
            err,
            ParseError::WrongCount {
                expected: 3,
                found: 2
            }
        ));
    }

    #[test]
    fn roundtrip_through_rendering() {
        let net = parse_net("ad-bc, ae+bd-c^2, be-cd").unwrap();
        let rendered = net_to_string(&net);
        let again = parse_net(&rendered).unwrap();
        assert_eq!(net, again);
    }

    #[test]
    fn exponent_forms() {
        let a2 = parse_quadric("a^2").unwrap();
        assert_eq!(a2, QuadraticForm::from_named(&[(1, "a^2")]));
        // implicit repetition also works
        let aa = parse_quadric("aa").unwrap();
        assert_eq!(aa, a2);
    }
}
