//! Compact working diagrams for the skein recursion.
//!
//! Crossings keep the normalized slot convention of
//! [`Crossing`](crate::diagram::Crossing); edge labels may be sparse while
//! a diagram is being simplified.

use crate::diagram::OrientedDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct X {
    pub e: [u32; 4],
    pub pos: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Work {
    pub xs: Vec<X>,
    pub loops: u32,
}

pub(crate) type Key = Box<[u16]>;

const NONE: u32 = u32::MAX;
const PASS: [(usize, usize); 2] = [(0, 2), (1, 3)];
const SMOOTH: [(usize, usize); 2] = [(0, 3), (1, 2)];

type End = (u32, u8);

fn over(x: &X, s: usize) -> bool {
    s.is_multiple_of(2) == x.pos
}

impl Work {
    pub fn from_diagram(d: &OrientedDiagram) -> Self {
        let (xs, loops) = d.raw_parts();
        Work {
            xs: xs
                .iter()
                .map(|c| X {
                    e: c.edges.map(|e| e as u32),
                    pos: c.over_first,
                })
                .collect(),
            loops: loops as u32,
        }
    }

    fn label_bound(&self) -> usize {
        self.xs
            .iter()
            .flat_map(|x| x.e)
            .max()
            .map_or(0, |m| m as usize + 1)
    }

    /// `(crossing, slot)` of the head and tail of every edge label.
    fn ends(&self) -> (Vec<End>, Vec<End>) {
        let n = self.label_bound();
        let mut head = vec![(NONE, 0); n];
        let mut tail = vec![(NONE, 0); n];
        for (i, x) in self.xs.iter().enumerate() {
            head[x.e[0] as usize] = (i as u32, 0);
            head[x.e[1] as usize] = (i as u32, 1);
            tail[x.e[2] as usize] = (i as u32, 2);
            tail[x.e[3] as usize] = (i as u32, 3);
        }
        (head, tail)
    }

    pub fn switched(&self, x: usize) -> Work {
        let mut w = self.clone();
        w.xs[x].pos = !w.xs[x].pos;
        w
    }

    pub fn smoothed(&self, x: usize) -> Work {
        let mut w = self.clone();
        w.remove(x, SMOOTH);
        w
    }

    /// Deletes crossing `x`, joining incoming and outgoing edges as given.
    fn remove(&mut self, x: usize, pairs: [(usize, usize); 2]) {
        let mut ed = self.xs[x].e;
        for k in 0..2 {
            let (i, o) = pairs[k];
            let (ein, eout) = (ed[i], ed[o]);
            if ein == eout {
                self.loops += 1;
                continue;
            }
            if k == 0 && ed[pairs[1].0] == eout {
                ed[pairs[1].0] = ein;
                continue;
            }
            'search: for (y, cy) in self.xs.iter_mut().enumerate() {
                if y == x {
                    continue;
                }
                for s in 0..2 {
                    if cy.e[s] == eout {
                        cy.e[s] = ein;
                        break 'search;
                    }
                }
            }
        }
        self.xs.swap_remove(x);
    }

    /// Removes curls and clasp bigons until none is left; returns whether
    /// anything changed.
    pub fn simplify(&mut self) -> bool {
        let mut changed = false;
        loop {
            let (head, tail) = self.ends();
            let curl = self.xs.iter().enumerate().find_map(|(i, x)| {
                (2..4)
                    .any(|o| head[x.e[o] as usize].0 == i as u32)
                    .then_some(i)
            });
            if let Some(i) = curl {
                self.remove(i, PASS);
                changed = true;
                continue;
            }
            if let Some((i, j)) = self.find_clasp(&head, &tail) {
                let (hi, lo) = (i.max(j), i.min(j));
                self.remove(hi, PASS);
                self.remove(lo, PASS);
                changed = true;
                continue;
            }
            return changed;
        }
    }

    /// A bigon face whose one edge is over at both ends.
    fn find_clasp(&self, head: &[(u32, u8)], tail: &[(u32, u8)]) -> Option<(usize, usize)> {
        // darts are (crossing, slot); alpha moves to the other end of the
        // edge, sigma rotates counterclockwise
        let alpha = |x: usize, s: usize| -> (usize, usize) {
            let e = self.xs[x].e[s] as usize;
            let (y, t) = if s < 2 { tail[e] } else { head[e] };
            (y as usize, t as usize)
        };
        for x in 0..self.xs.len() {
            for s in 0..4 {
                let (y, t) = alpha(x, s);
                if y == x {
                    continue;
                }
                let t2 = (t + 1) % 4;
                let (x2, s2) = alpha(y, t2);
                if x2 != x || (s2 + 1) % 4 != s {
                    continue;
                }
                let (cx, cy) = (&self.xs[x], &self.xs[y]);
                if over(cx, s) == over(cy, t) && over(cy, t2) == over(cx, s2) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Groups of crossings joined by edges.
    pub fn split(&self) -> Vec<Work> {
        let n = self.xs.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let (head, _) = self.ends();
        for (i, x) in self.xs.iter().enumerate() {
            for o in 2..4 {
                let j = head[x.e[o] as usize].0 as usize;
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
        let mut groups: Vec<(usize, Work)> = Vec::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            match groups.iter_mut().find(|(g, _)| *g == r) {
                Some((_, w)) => w.xs.push(self.xs[i]),
                None => groups.push((
                    r,
                    Work {
                        xs: vec![self.xs[i]],
                        loops: 0,
                    },
                )),
            }
        }
        groups.into_iter().map(|(_, w)| w).collect()
    }

    /// Edge `e`'s successor along its component, for a crossing diagram.
    fn next_edge(&self, head: &[(u32, u8)], e: u32) -> u32 {
        let (x, s) = head[e as usize];
        self.xs[x as usize].e[s as usize + 2]
    }

    /// Walks every component from its first label and returns the first
    /// crossing met first on the under strand.
    pub fn first_bad(&self) -> Option<usize> {
        let (head, _) = self.ends();
        let mut seen_edge = vec![false; head.len()];
        let mut seen_x = vec![false; self.xs.len()];
        for start in 0..head.len() as u32 {
            if head[start as usize].0 == NONE || seen_edge[start as usize] {
                continue;
            }
            let mut e = start;
            loop {
                seen_edge[e as usize] = true;
                let (x, s) = head[e as usize];
                let (x, s) = (x as usize, s as usize);
                if !seen_x[x] {
                    seen_x[x] = true;
                    if !over(&self.xs[x], s) {
                        return Some(x);
                    }
                }
                e = self.xs[x].e[s + 2];
                if e == start {
                    break;
                }
            }
        }
        None
    }

    /// Number of components that pass a crossing.
    pub fn crossing_components(&self) -> usize {
        let (head, _) = self.ends();
        let mut seen = vec![false; head.len()];
        let mut count = 0;
        for start in 0..head.len() as u32 {
            if head[start as usize].0 == NONE || seen[start as usize] {
                continue;
            }
            count += 1;
            let mut e = start;
            while !seen[e as usize] {
                seen[e as usize] = true;
                e = self.next_edge(&head, e);
            }
        }
        count
    }

    /// Relabels from the start edge whose traversal code is smallest and
    /// returns the relabeled diagram with that code.
    ///
    /// The code lists, edge by edge, the label and slot of the crossing the
    /// edge runs into, then the crossing signs and the number of free
    /// loops; it determines the diagram up to planar isomorphism.
    pub fn canonical(&self) -> (Work, Key) {
        let (head, _) = self.ends();
        let mut best: Option<(Vec<u16>, u32)> = None;
        let mut buf = Vec::new();
        let mut xl = vec![NONE; self.xs.len()];
        let mut el = vec![NONE; head.len()];
        for start in 0..head.len() as u32 {
            if head[start as usize].0 == NONE {
                continue;
            }
            self.encode(&head, start, &mut buf, &mut xl, &mut el);
            if best.as_ref().is_none_or(|(b, _)| buf < *b) {
                best = Some((buf.clone(), start));
            }
        }
        let Some((code, start)) = best else {
            let key = vec![u16::MAX, self.loops as u16].into_boxed_slice();
            return (
                Work {
                    xs: Vec::new(),
                    loops: self.loops,
                },
                key,
            );
        };
        self.encode(&head, start, &mut buf, &mut xl, &mut el);
        let mut xs = vec![
            X {
                e: [0; 4],
                pos: false
            };
            self.xs.len()
        ];
        for (i, x) in self.xs.iter().enumerate() {
            xs[xl[i] as usize] = X {
                e: x.e.map(|e| el[e as usize]),
                pos: x.pos,
            };
        }
        (
            Work {
                xs,
                loops: self.loops,
            },
            code.into_boxed_slice(),
        )
    }

    fn encode(
        &self,
        head: &[(u32, u8)],
        start: u32,
        buf: &mut Vec<u16>,
        xl: &mut [u32],
        el: &mut [u32],
    ) {
        buf.clear();
        xl.iter_mut().for_each(|v| *v = NONE);
        el.iter_mut().for_each(|v| *v = NONE);
        let mut next_x = 0u32;
        let mut next_e = 0u32;
        let mut order: Vec<usize> = Vec::with_capacity(self.xs.len());
        let mut s0 = Some(start);
        while let Some(st) = s0 {
            let mut e = st;
            loop {
                el[e as usize] = next_e;
                next_e += 1;
                let (x, s) = head[e as usize];
                let x = x as usize;
                if xl[x] == NONE {
                    xl[x] = next_x;
                    next_x += 1;
                    order.push(x);
                }
                buf.push((2 * xl[x] + s as u32) as u16);
                e = self.xs[x].e[s as usize + 2];
                if e == st {
                    break;
                }
            }
            buf.push(u16::MAX);
            // next component: smallest (label, slot) with an unlabeled edge
            s0 = order.iter().find_map(|&x| {
                (0..2)
                    .map(|s| self.xs[x].e[s])
                    .find(|&e| el[e as usize] == NONE)
            });
            if s0.is_none() {
                s0 = (0..head.len() as u32)
                    .find(|&e| head[e as usize].0 != NONE && el[e as usize] == NONE);
            }
        }
        for &x in &order {
            buf.push(self.xs[x].pos as u16);
        }
        buf.push(self.loops as u16);
    }
}
