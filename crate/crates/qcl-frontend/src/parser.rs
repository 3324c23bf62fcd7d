use crate::ast::{BinOp, Block, Expr, Param, ParamType, ProcDef, Program, Stmt, UnaryOp};
use crate::error::ParseError;
use crate::token::{Keyword, Token, TokenKind};

/// Recursive-descent parser over the token stream; fails at the first
/// violation with position and expectation.
pub fn parse_program(tokens: &[Token]) -> Result<Program, ParseError> {
    let mut parser = Parser { tokens, pos: 0 };
    let mut procedures = Vec::new();
    while parser.peek().is_some() {
        procedures.push(parser.procdef()?);
    }
    if procedures.is_empty() {
        return Err(parser.error_here("`procedure`"));
    }
    Ok(Program { procedures })
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn peek_next_kind(&self) -> Option<&TokenKind> {
        self.tokens.get(self.pos + 1).map(|t| &t.kind)
    }

    fn at(&self, kind: &TokenKind) -> bool {
        self.peek_kind() == Some(kind)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.at(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<(), ParseError> {
        if self.eat(&kind) {
            Ok(())
        } else {
            Err(self.error_here(&kind.describe()))
        }
    }

    fn expect_ident(&mut self) -> Result<String, ParseError> {
        match self.peek_kind() {
            Some(TokenKind::Ident(name)) => {
                let name = name.clone();
                self.pos += 1;
                Ok(name)
            }
            _ => Err(self.error_here("an identifier")),
        }
    }

    /// Error positioned at the current token, or just past the last one
    /// when the stream is exhausted.
    fn error_here(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(token) => ParseError {
                line: token.line,
                column: token.column,
                expected: expected.into(),
                found: token.kind.describe(),
            },
            None => {
                let (line, column) = self
                    .tokens
                    .last()
                    .map(|t| (t.line, t.column + 1))
                    .unwrap_or((1, 1));
                ParseError {
                    line,
                    column,
                    expected: expected.into(),
                    found: "end of input".into(),
                }
            }
        }
    }

    fn procdef(&mut self) -> Result<ProcDef, ParseError> {
        self.expect(TokenKind::Keyword(Keyword::Procedure))?;
        let name = self.expect_ident()?;
        self.expect(TokenKind::LParen)?;
        let params = if self.at(&TokenKind::RParen) {
            Vec::new()
        } else {
            self.params()?
        };
        self.expect(TokenKind::RParen)?;
        let body = self.block()?;
        Ok(ProcDef { name, params, body })
    }

    fn param_type(&mut self) -> Option<ParamType> {
        let ty = match self.peek_kind() {
            Some(TokenKind::Keyword(Keyword::Int)) => ParamType::Int,
            Some(TokenKind::Keyword(Keyword::Qureg)) => ParamType::Qureg,
            Some(TokenKind::Keyword(Keyword::Quvoid)) => ParamType::Quvoid,
            _ => return None,
        };
        self.pos += 1;
        Some(ty)
    }

    /// `type name {"," [type] name}`; a parameter without its own type
    /// keyword inherits the previous one, as in `int hasil, bil`.
    fn params(&mut self) -> Result<Vec<Param>, ParseError> {
        let mut params = Vec::new();
        let mut ty = match self.param_type() {
            Some(ty) => ty,
            None => return Err(self.error_here("`int`, `qureg` or `quvoid`")),
        };
        loop {
            let name = self.expect_ident()?;
            params.push(Param { ty, name });
            if !self.eat(&TokenKind::Comma) {
                break;
            }
            if let Some(next_ty) = self.param_type() {
                ty = next_ty;
            }
        }
        Ok(params)
    }

    fn block(&mut self) -> Result<Block, ParseError> {
        self.expect(TokenKind::LBrace)?;
        let mut stmts = Vec::new();
        while !self.at(&TokenKind::RBrace) {
            if self.peek().is_none() {
                return Err(self.error_here("`}`"));
            }
            stmts.push(self.stmt()?);
        }
        self.expect(TokenKind::RBrace)?;
        Ok(Block { stmts })
    }

    fn stmt(&mut self) -> Result<Stmt, ParseError> {
        match self.peek_kind() {
            Some(TokenKind::Keyword(Keyword::Int)) => self.decl_int(),
            Some(TokenKind::Keyword(Keyword::Qureg)) => self.decl_reg(),
            Some(TokenKind::Keyword(Keyword::Quvoid)) => {
                Err(self.error_here("a statement (`quvoid` is only a parameter type)"))
            }
            Some(TokenKind::Keyword(Keyword::For)) => self.for_loop(),
            Some(TokenKind::Keyword(Keyword::If)) => self.if_stmt(),
            Some(TokenKind::Keyword(Keyword::Input)) => self.input_stmt(),
            Some(TokenKind::Keyword(Keyword::Print)) => self.print_stmt(),
            Some(TokenKind::Keyword(Keyword::Measure)) => self.measure_stmt(),
            Some(TokenKind::Keyword(Keyword::Reset)) => {
                self.pos += 1;
                self.expect(TokenKind::Semi)?;
                Ok(Stmt::Reset)
            }
            Some(TokenKind::LBrace) => {
                let body = self.block()?;
                if self.eat(&TokenKind::Keyword(Keyword::Until)) {
                    let cond = self.expr()?;
                    self.expect(TokenKind::Semi)?;
                    Ok(Stmt::Until { body, cond })
                } else {
                    Ok(Stmt::Block(body))
                }
            }
            Some(TokenKind::Bang) => {
                self.pos += 1;
                self.call_stmt(true)
            }
            Some(TokenKind::Ident(_)) => match self.peek_next_kind() {
                Some(TokenKind::LParen) => self.call_stmt(false),
                Some(TokenKind::Assign) => {
                    let name = self.expect_ident()?;
                    self.expect(TokenKind::Assign)?;
                    let value = self.expr()?;
                    self.expect(TokenKind::Semi)?;
                    Ok(Stmt::Assign { name, value })
                }
                _ => {
                    self.pos += 1;
                    Err(self.error_here("`(` for a call or `=` for an assignment"))
                }
            },
            _ => Err(self.error_here("a statement")),
        }
    }

    fn decl_int(&mut self) -> Result<Stmt, ParseError> {
        self.expect(TokenKind::Keyword(Keyword::Int))?;
        let name = self.expect_ident()?;
        let init = if self.eat(&TokenKind::Assign) {
            Some(self.expr()?)
        } else {
            None
        };
        self.expect(TokenKind::Semi)?;
        Ok(Stmt::DeclInt { name, init })
    }

    fn decl_reg(&mut self) -> Result<Stmt, ParseError> {
        self.expect(TokenKind::Keyword(Keyword::Qureg))?;
        let name = self.expect_ident()?;
        self.expect(TokenKind::LBracket)?;
        let width = self.expr()?;
        self.expect(TokenKind::RBracket)?;
        self.expect(TokenKind::Semi)?;
        Ok(Stmt::DeclReg { name, width })
    }

    fn for_loop(&mut self) -> Result<Stmt, ParseError> {
        self.expect(TokenKind::Keyword(Keyword::For))?;
        let var = self.expect_ident()?;
        self.expect(TokenKind::Assign)?;
        let from = self.expr()?;
        self.expect(TokenKind::Keyword(Keyword::To))?;
        let to = self.expr()?;
        let body = self.block()?;
        Ok(Stmt::For {
            var,
            from,
            to,
            body,
        })
    }

    fn if_stmt(&mut self) -> Result<Stmt, ParseError> {
        self.expect(TokenKind::Keyword(Keyword::If))?;
        let cond = self.expr()?;
        let then_branch = self.block()?;
        let else_branch = if self.eat(&TokenKind::Keyword(Keyword::Else)) {
            Some(self.block()?)
        } else {
            None
        };
        Ok(Stmt::If {
            cond,
            then_branch,
            else_branch,
        })
    }

    fn input_stmt(&mut self) -> Result<Stmt, ParseError> {
        self.expect(TokenKind::Keyword(Keyword::Input))?;
        let prompt = match self.peek_kind() {
            Some(TokenKind::Str(text)) => {
                let text = text.clone();
                self.pos += 1;
                self.expect(TokenKind::Comma)?;
                Some(text)
            }
            _ => None,
        };
        let var = self.expect_ident()?;
        self.expect(TokenKind::Semi)?;
        Ok(Stmt::Input { prompt, var })
    }

    fn print_stmt(&mut self) -> Result<Stmt, ParseError> {
        self.expect(TokenKind::Keyword(Keyword::Print))?;
        let mut args = Vec::new();
        if !self.at(&TokenKind::Semi) {
            loop {
                args.push(self.expr()?);
                if !self.eat(&TokenKind::Comma) {
                    break;
                }
            }
        }
        self.expect(TokenKind::Semi)?;
        Ok(Stmt::Print { args })
    }

    fn measure_stmt(&mut self) -> Result<Stmt, ParseError> {
        self.expect(TokenKind::Keyword(Keyword::Measure))?;
        let reg = self.expr()?;
        self.expect(TokenKind::Comma)?;
        let var = self.expect_ident()?;
        self.expect(TokenKind::Semi)?;
        Ok(Stmt::Measure { reg, var })
    }

    fn call_stmt(&mut self, inverted: bool) -> Result<Stmt, ParseError> {
        let name = self.expect_ident()?;
        self.expect(TokenKind::LParen)?;
        let mut args = Vec::new();
        if !self.at(&TokenKind::RParen) {
            loop {
                args.push(self.expr()?);
                if !self.eat(&TokenKind::Comma) {
                    break;
                }
            }
        }
        self.expect(TokenKind::RParen)?;
        self.expect(TokenKind::Semi)?;
        Ok(Stmt::Call {
            name,
            args,
            inverted,
        })
    }

    // Expression grammar, loosest to tightest:
    //   cmp  := sum ["==" sum]            (no chaining)
    //   sum  := prod {("+"|"-") prod}
    //   prod := unary {("*"|"/") unary}
    //   unary := ("-"|"!"|"not") unary | power
    //   power := postfix ["^" unary]      (right-associative)
    //   postfix := atom {"(" args ")" | "[" expr "]"}   (names only)
    //   atom := int | string | ident | "#" ident | "(" expr ")"

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.sum()?;
        if self.eat(&TokenKind::EqEq) {
            let rhs = self.sum()?;
            return Ok(Expr::Binary {
                op: BinOp::Eq,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            });
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.prod()?;
        loop {
            let op = match self.peek_kind() {
                Some(TokenKind::Plus) => BinOp::Add,
                Some(TokenKind::Minus) => BinOp::Sub,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.prod()?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek_kind() {
                Some(TokenKind::Star) => BinOp::Mul,
                Some(TokenKind::Slash) => BinOp::Div,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let op = match self.peek_kind() {
            Some(TokenKind::Minus) => Some(UnaryOp::Neg),
            Some(TokenKind::Bang) | Some(TokenKind::Keyword(Keyword::Not)) => Some(UnaryOp::Not),
            _ => None,
        };
        if let Some(op) = op {
            self.pos += 1;
            let operand = self.unary()?;
            return Ok(Expr::Unary {
                op,
                operand: Box::new(operand),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.postfix()?;
        if self.eat(&TokenKind::Caret) {
            let rhs = self.unary()?;
            return Ok(Expr::Binary {
                op: BinOp::Pow,
                lhs: Box::new(base),
                rhs: Box::new(rhs),
            });
        }
        Ok(base)
    }

    fn postfix(&mut self) -> Result<Expr, ParseError> {
        let mut expr = self.atom()?;
        loop {
            match self.peek_kind() {
                Some(TokenKind::LParen) => {
                    let name = match expr {
                        Expr::Var(name) => name,
                        _ => return Err(self.error_here("no `(` here (only names are callable)")),
                    };
                    self.pos += 1;
                    let mut args = Vec::new();
                    if !self.at(&TokenKind::RParen) {
                        loop {
                            args.push(self.expr()?);
                            if !self.eat(&TokenKind::Comma) {
                                break;
                            }
                        }
                    }
                    self.expect(TokenKind::RParen)?;
                    expr = Expr::Call { name, args };
                }
                Some(TokenKind::LBracket) => {
                    let base = match expr {
                        Expr::Var(name) => name,
                        _ => return Err(self.error_here("no `[` here (only names are indexable)")),
                    };
                    self.pos += 1;
                    let index = self.expr()?;
                    self.expect(TokenKind::RBracket)?;
                    expr = Expr::Index {
                        base,
                        index: Box::new(index),
                    };
                }
                _ => break,
            }
        }
        Ok(expr)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek_kind() {
            Some(TokenKind::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Some(TokenKind::Str(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(Expr::Str(s))
            }
            Some(TokenKind::Ident(name)) => {
                let name = name.clone();
                self.pos += 1;
                Ok(Expr::Var(name))
            }
            Some(TokenKind::Hash) => {
                self.pos += 1;
                let name = self.expect_ident()?;
                Ok(Expr::Width(name))
            }
            Some(TokenKind::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(TokenKind::RParen)?;
                Ok(inner)
            }
            _ => Err(self.error_here("an expression")),
        }
    }
}
