//! Channel-wise fuzzy curves.
//!
//! A [`FuzzyCurveBundle`] holds one interpolating B-spline per channel. All
//! channels share the parameters and knots derived from the crisp channel, so
//! the curves correspond laterally at every parameter value.
//!
//! Stage transitions run on control points. Because each stage is an affine
//! combination with position-independent weights and the interpolation solve
//! is linear in its right-hand side, this gives the same curves as running
//! the stage on the data and interpolating again; [`FuzzyCurveBundle::refit`]
//! does the latter so the two routes can be compared.

use std::fmt;

use crate::bspline::{
    average_knots, parametrize, sample_parameters, Interpolator, KnotVector, ParamChoice,
    SplineCurve,
};
use crate::ops::{self, centroid3, cut_toward, Alpha, AlphaCutPoint, ReducedPoint};
use crate::point::{CrispPoint, Dataset, FuzzyDataPoint, Lateral};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Channel {
    Lateral(Lateral),
    /// Reduced left footprint.
    ReducedLeft,
    /// Reduced right footprint.
    ReducedRight,
    Defuzzified,
}

impl Channel {
    pub const CRISP: Channel = Channel::Lateral(Lateral::Crisp);

    pub fn name(self) -> &'static str {
        match self {
            Channel::Lateral(l) => l.key(),
            Channel::ReducedLeft => "left",
            Channel::ReducedRight => "right",
            Channel::Defuzzified => "defuzzified",
        }
    }
}

impl From<Lateral> for Channel {
    fn from(l: Lateral) -> Self {
        Channel::Lateral(l)
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Fuzzy,
    AlphaCut,
    Reduced,
    Defuzzified,
}

impl Stage {
    pub const ALL: [Stage; 4] = [
        Stage::Fuzzy,
        Stage::AlphaCut,
        Stage::Reduced,
        Stage::Defuzzified,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Fuzzy => "fuzzy",
            Stage::AlphaCut => "alpha-cut",
            Stage::Reduced => "reduced",
            Stage::Defuzzified => "defuzzified",
        }
    }

    /// Panel letter used for rendered files, `a` through `d`.
    pub fn letter(self) -> char {
        match self {
            Stage::Fuzzy => 'a',
            Stage::AlphaCut => 'b',
            Stage::Reduced => 'c',
            Stage::Defuzzified => 'd',
        }
    }

    /// The channels a bundle at this stage carries, in order.
    pub fn channels(self) -> Vec<Channel> {
        match self {
            Stage::Fuzzy | Stage::AlphaCut => Lateral::ALL.iter().map(|&l| l.into()).collect(),
            Stage::Reduced => vec![Channel::ReducedLeft, Channel::CRISP, Channel::ReducedRight],
            Stage::Defuzzified => vec![Channel::Defuzzified],
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One channel's stage data and the curve through it.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelCurve {
    pub channel: Channel,
    pub data: Vec<CrispPoint>,
    pub curve: SplineCurve,
}

#[derive(Debug, Clone)]
pub struct FuzzyCurveBundle {
    stage: Stage,
    alpha: Option<Alpha>,
    interpolator: Interpolator,
    channels: Vec<ChannelCurve>,
}

impl PartialEq for FuzzyCurveBundle {
    fn eq(&self, other: &Self) -> bool {
        self.stage == other.stage
            && self.alpha == other.alpha
            && self.params() == other.params()
            && self.knots() == other.knots()
            && self.channels == other.channels
    }
}

impl FuzzyCurveBundle {
    /// Interpolates all seven lateral channels of `d`.
    ///
    /// Parameters come from the crisp channel under `choice`; knots are
    /// averaged from them at `degree`.
    pub fn build(d: &Dataset, degree: usize, choice: ParamChoice) -> Result<Self> {
        d.validate().into_result()?;
        if degree < 1 || d.len() < degree + 1 {
            return Err(Error::Arity {
                what: "data points for this degree",
                required: degree.max(1) + 1,
                actual: d.len(),
            });
        }
        let params = parametrize(&d.crisp_points(), choice)?;
        let knots = average_knots(&params, degree)?;
        let interpolator = Interpolator::new(&params, knots)?;
        let channels = Lateral::ALL
            .iter()
            .map(|&l| {
                let data = d.channel(l);
                let curve = interpolator.fit(&data)?;
                Ok(ChannelCurve {
                    channel: l.into(),
                    data,
                    curve,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            stage: Stage::Fuzzy,
            alpha: None,
            interpolator,
            channels,
        })
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn alpha(&self) -> Option<Alpha> {
        self.alpha
    }

    pub fn params(&self) -> &[f64] {
        self.interpolator.params()
    }

    pub fn knots(&self) -> &KnotVector {
        self.interpolator.knots()
    }

    pub fn degree(&self) -> usize {
        self.knots().degree()
    }

    pub fn channels(&self) -> &[ChannelCurve] {
        &self.channels
    }

    pub fn channel(&self, channel: Channel) -> Option<&ChannelCurve> {
        self.channels.iter().find(|c| c.channel == channel)
    }

    fn expect_stage(&self, expected: Stage) -> Result<()> {
        if self.stage == expected {
            Ok(())
        } else {
            Err(Error::Stage {
                expected: expected.name(),
                actual: self.stage.name(),
            })
        }
    }

    fn curve(&self, channel: Channel) -> &ChannelCurve {
        self.channel(channel)
            .expect("stage invariant guarantees the channel is present")
    }

    /// The lateral data reassembled into points (fuzzy and alpha-cut stages).
    fn lateral_points(&self) -> Vec<FuzzyDataPoint> {
        let cols: Vec<&[CrispPoint]> = Lateral::ALL
            .iter()
            .map(|&l| self.curve(l.into()).data.as_slice())
            .collect();
        (0..self.params().len())
            .map(|i| FuzzyDataPoint::from_array(std::array::from_fn(|k| cols[k][i])))
            .collect()
    }

    /// Shrinks every lateral channel toward the crisp channel by `alpha`.
    pub fn apply_alpha_cut(&self, alpha: f64) -> Result<Self> {
        self.expect_stage(Stage::Fuzzy)?;
        let alpha = Alpha::new(alpha)?;
        let cuts = self
            .lateral_points()
            .iter()
            .map(|p| ops::alpha_cut(p, alpha.get()))
            .collect::<Result<Vec<_>>>()?;
        let crisp = self.curve(Channel::CRISP).curve.control().to_vec();
        let channels = Lateral::ALL
            .iter()
            .map(|&l| {
                let src = self.curve(l.into());
                let mut k = 0;
                let curve = src.curve.map_control(|c| {
                    let v = cut_toward(*c, crisp[k], alpha);
                    k += 1;
                    v
                });
                ChannelCurve {
                    channel: l.into(),
                    data: cuts.iter().map(|a| a.point.get(l)).collect(),
                    curve,
                }
            })
            .collect();
        Ok(Self {
            stage: Stage::AlphaCut,
            alpha: Some(alpha),
            interpolator: self.interpolator.clone(),
            channels,
        })
    }

    /// Collapses each footprint to its centroid: three channels remain.
    pub fn apply_type_reduction(&self) -> Result<Self> {
        self.expect_stage(Stage::AlphaCut)?;
        let alpha = self.alpha.expect("alpha-cut bundle carries alpha");
        let reduced = self
            .lateral_points()
            .iter()
            .map(|p| ops::type_reduce(&AlphaCutPoint { point: *p, alpha }))
            .collect::<Result<Vec<_>>>()?;
        let mean_of = |a: Lateral, b: Lateral, c: Lateral| {
            let [a, b, c] = [a, b, c].map(|l| self.curve(l.into()).curve.control());
            let control = (0..a.len()).map(|j| centroid3(a[j], b[j], c[j])).collect();
            SplineCurve::new(self.knots().clone(), control)
        };
        let channels = vec![
            ChannelCurve {
                channel: Channel::ReducedLeft,
                data: reduced.iter().map(|r| r.left).collect(),
                curve: mean_of(Lateral::LeftLeft, Lateral::Left, Lateral::RightLeft)?,
            },
            ChannelCurve {
                channel: Channel::CRISP,
                data: reduced.iter().map(|r| r.crisp).collect(),
                curve: self.curve(Channel::CRISP).curve.clone(),
            },
            ChannelCurve {
                channel: Channel::ReducedRight,
                data: reduced.iter().map(|r| r.right).collect(),
                curve: mean_of(Lateral::LeftRight, Lateral::Right, Lateral::RightRight)?,
            },
        ];
        Ok(Self {
            stage: Stage::Reduced,
            alpha: self.alpha,
            interpolator: self.interpolator.clone(),
            channels,
        })
    }

    /// Averages the reduced triple into a single channel.
    pub fn apply_defuzzification(&self) -> Result<Self> {
        self.expect_stage(Stage::Reduced)?;
        let alpha = self.alpha.expect("reduced bundle carries alpha");
        let [left, crisp, right] =
            [Channel::ReducedLeft, Channel::CRISP, Channel::ReducedRight].map(|c| self.curve(c));
        let data = (0..self.params().len())
            .map(|i| {
                ops::defuzzify(&ReducedPoint {
                    left: left.data[i],
                    crisp: crisp.data[i],
                    right: right.data[i],
                    alpha,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let (l, c, r) = (
            left.curve.control(),
            crisp.curve.control(),
            right.curve.control(),
        );
        let control = (0..l.len()).map(|j| centroid3(l[j], c[j], r[j])).collect();
        Ok(Self {
            stage: Stage::Defuzzified,
            alpha: self.alpha,
            interpolator: self.interpolator.clone(),
            channels: vec![ChannelCurve {
                channel: Channel::Defuzzified,
                data,
                curve: SplineCurve::new(self.knots().clone(), control)?,
            }],
        })
    }

    /// The next stage in the fixed order fuzzy → alpha-cut → reduced →
    /// defuzzified. `alpha` is only used for the first transition.
    pub fn advance(&self, alpha: f64) -> Result<Self> {
        match self.stage {
            Stage::Fuzzy => self.apply_alpha_cut(alpha),
            Stage::AlphaCut => self.apply_type_reduction(),
            Stage::Reduced => self.apply_defuzzification(),
            Stage::Defuzzified => Err(Error::Stage {
                expected: "non-final",
                actual: self.stage.name(),
            }),
        }
    }

    /// All four stages starting from a fuzzy bundle.
    pub fn all_stages(&self, alpha: f64) -> Result<[Self; 4]> {
        self.expect_stage(Stage::Fuzzy)?;
        let b = self.advance(alpha)?;
        let c = b.advance(alpha)?;
        let d = c.advance(alpha)?;
        Ok([self.clone(), b, c, d])
    }

    /// The same bundle with every channel re-interpolated from its stage data
    /// instead of transformed control points.
    pub fn refit(&self) -> Result<Self> {
        let channels = self
            .channels
            .iter()
            .map(|c| {
                Ok(ChannelCurve {
                    channel: c.channel,
                    data: c.data.clone(),
                    curve: self.interpolator.fit(&c.data)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            channels,
            ..self.clone()
        })
    }

    /// Largest control-point coordinate difference against `other`, channel
    /// by channel. `None` if the channel sets differ.
    pub fn max_control_diff(&self, other: &Self) -> Option<f64> {
        if self.channels.len() != other.channels.len() {
            return None;
        }
        let mut worst: f64 = 0.0;
        for (a, b) in self.channels.iter().zip(&other.channels) {
            if a.channel != b.channel {
                return None;
            }
            for (p, q) in a.curve.control().iter().zip(b.curve.control()) {
                worst = worst.max(p.max_abs_diff(q));
            }
        }
        Some(worst)
    }

    /// Worst interpolation residual over all channels at the shared
    /// parameters.
    pub fn max_residual(&self) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for c in &self.channels {
            for (t, d) in self.params().iter().zip(&c.data) {
                worst = worst.max(c.curve.eval(*t)?.max_abs_diff(d));
            }
        }
        Ok(worst)
    }

    /// Samples every channel at `n` evenly spaced parameters.
    pub fn sample(&self, n: usize) -> Result<Vec<ChannelSamples>> {
        let ts = sample_parameters(self.knots(), n)?;
        self.channels
            .iter()
            .map(|c| {
                let points = ts
                    .iter()
                    .map(|&t| c.curve.eval(t))
                    .collect::<Result<Vec<_>>>()?;
                Ok(ChannelSamples {
                    channel: c.channel,
                    params: ts.clone(),
                    points,
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChannelSamples {
    pub channel: Channel,
    pub params: Vec<f64>,
    pub points: Vec<CrispPoint>,
}
