//! Window notation `[v^c, …]` and the descriptor form `G(r,p,s,n)`.
//!
//! Grammar: `[ item (, item)* ]` where `item` is a value optionally followed
//! by `^color` with the color in `[1, r-1]`. For `r = 2` the signed form
//! `-v` is accepted as an alias for `v^1`. ASCII whitespace between tokens
//! is ignored.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::{ColoredPermutation, GroupDescriptor, ProjectiveElement};
use crate::error::{Error, Result};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            self.err(&alloc::format!("expected `{}`", b as char))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits.parse().or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            self.err("trailing input")
        } else {
            Ok(())
        }
    }
}

/// Parses `G(r,p,s,n)` and validates the existence conditions.
pub fn parse_group(text: &str) -> Result<GroupDescriptor> {
    let mut c = Cursor::new(text);
    c.expect(b'G')?;
    c.expect(b'(')?;
    let mut params = [0u32; 4];
    for (i, slot) in params.iter_mut().enumerate() {
        if i > 0 {
            c.expect(b',')?;
        }
        *slot = c.number()?;
    }
    c.expect(b')')?;
    c.finish()?;
    GroupDescriptor::new(params[0], params[1], params[2], params[3])
}

/// Parses a window and canonicalizes it in `group`.
pub fn parse_element(text: &str, group: GroupDescriptor) -> Result<ProjectiveElement> {
    let r = group.r();
    let mut c = Cursor::new(text);
    c.expect(b'[')?;
    let mut sigma = Vec::new();
    let mut colors = Vec::new();
    if !c.eat(b']') {
        loop {
            let item_pos = {
                c.skip_ws();
                c.pos
            };
            let negative = c.eat(b'-');
            if negative && r != 2 {
                c.pos = item_pos;
                return c.err("signed entries are only allowed for r = 2");
            }
            let value = c.number()?;
            if value == 0 || value > group.n() {
                return Err(Error::Range(alloc::format!(
                    "value {value} at byte {item_pos} not in [1,{}]",
                    group.n()
                )));
            }
            let mut color = u32::from(negative);
            if c.eat(b'^') {
                if negative {
                    return c.err("signed entry cannot also carry a color");
                }
                let color_pos = c.pos;
                color = c.number()?;
                if color == 0 || color >= r {
                    return Err(Error::Range(alloc::format!(
                        "color {color} at byte {color_pos} not in [1,{}]",
                        r.saturating_sub(1)
                    )));
                }
            }
            sigma.push(value);
            colors.push(color);
            if c.eat(b']') {
                break;
            }
            c.expect(b',')?;
        }
    }
    c.finish()?;
    if sigma.len() != group.n() as usize {
        return Err(Error::Range(alloc::format!(
            "window has {} entries but n = {}",
            sigma.len(),
            group.n()
        )));
    }
    let lift = ColoredPermutation::new(sigma, colors)?;
    ProjectiveElement::canonicalize(lift, group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use alloc::string::ToString;

    #[test]
    fn parses_the_worked_element() {
        let g = make_group(6, 2, 3, 8).unwrap();
        let x = parse_element("[2^2,7^3,6^3,4^5,8^1,1^1,5^3,3^2]", g).unwrap();
        assert_eq!(x.lift().sigma(), &[2, 7, 6, 4, 8, 1, 5, 3]);
        // canonical lift: shifted down by r/s = 2
        assert_eq!(x.lift().colors(), &[0, 1, 1, 3, 5, 5, 1, 0]);
        assert_eq!(x.to_string(), "[2,7^1,6^1,4^3,8^5,1^5,5^1,3]");
    }

    #[test]
    fn identity_and_round_trip() {
        let g = make_group(4, 2, 2, 3).unwrap();
        assert_eq!(parse_element("[1,2,3]", g).unwrap(), g.identity());
        let b = make_group(2, 1, 1, 2).unwrap();
        let x = parse_element("[2^1,1]", b).unwrap();
        assert_eq!(x.to_string(), "[2^1,1]");
        assert_eq!(parse_element(" [ 2 ^ 1 , 1 ] ", b).unwrap(), x);
    }

    #[test]
    fn signed_alias_for_r2() {
        let b = make_group(2, 1, 1, 7).unwrap();
        let x = parse_element("[5,-2,-1,-4,6,-3,-7]", b).unwrap();
        assert_eq!(x.to_string(), "[5,2^1,1^1,4^1,6,3^1,7^1]");
        let g = make_group(3, 1, 1, 2).unwrap();
        assert!(matches!(parse_element("[-1,2]", g), Err(Error::Parse { pos: 1, .. })));
    }

    #[test]
    fn errors_carry_positions_and_ranges() {
        let g = make_group(3, 1, 1, 2).unwrap();
        assert!(matches!(parse_element("[1,2", g), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_element("1,2]", g), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_element("[1,2]x", g), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_element("[1^3,2]", g), Err(Error::Range(_))));
        assert!(matches!(parse_element("[1^0,2]", g), Err(Error::Range(_))));
        assert!(matches!(parse_element("[1,3]", g), Err(Error::Range(_))));
        assert!(matches!(parse_element("[1,1]", g), Err(Error::Range(_))));
        assert!(matches!(parse_element("[1]", g), Err(Error::Range(_))));
    }

    #[test]
    fn group_descriptor_text() {
        let g = parse_group("G(6,2,3,8)").unwrap();
        assert_eq!(g.to_string(), "G(6,2,3,8)");
        assert_eq!("G(1,1,1,3)".parse::<GroupDescriptor>().unwrap().order(), 6);
        assert!(matches!(parse_group("G(2,2,2,1)"), Err(Error::Divisibility { .. })));
        assert!(matches!(parse_group("G(2,2,2)"), Err(Error::Parse { .. })));
    }
}
