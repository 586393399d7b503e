//! Published reference values used by the acceptance harness.

/// Monthly aggregate, trend, seasonal and random from January 2010.
pub const DECOMPOSITION: [(f64, Option<f64>, f64, Option<f64>); 72] = [
    (7380.0, None, 64.0, None),
    (6958.0, None, -5.0, None),
    (7584.0, None, -23.0, None),
    (7702.0, None, 55.0, None),
    (7581.0, None, -65.0, None),
    (8034.0, None, -326.0, None),
    (8315.0, Some(8552.0), -294.0, Some(56.0)),
    (8710.0, Some(8704.0), -420.0, Some(426.0)),
    (9269.0, Some(8821.0), 35.0, Some(413.0)),
    (9844.0, Some(8947.0), 247.0, Some(649.0)),
    (10127.0, Some(9085.0), 429.0, Some(614.0)),
    (10100.0, Some(9171.0), 302.0, Some(627.0)),
    (9426.0, Some(9220.0), 64.0, Some(142.0)),
    (8547.0, Some(9231.0), -5.0, Some(-679.0)),
    (8806.0, Some(9192.0), -23.0, Some(-364.0)),
    (9515.0, Some(9126.0), 55.0, Some(334.0)),
    (9061.0, Some(9029.0), -65.0, Some(97.0)),
    (8626.0, Some(8900.0), -326.0, Some(52.0)),
    (8902.0, Some(8792.0), -294.0, Some(404.0)),
    (8390.0, Some(8812.0), -420.0, Some(-2.0)),
    (8656.0, Some(8916.0), 35.0, Some(-295.0)),
    (8866.0, Some(9001.0), 247.0, Some(-382.0)),
    (8771.0, Some(9057.0), 429.0, Some(-715.0)),
    (8359.0, Some(9100.0), 302.0, Some(-1044.0)),
    (8576.0, Some(9135.0), 64.0, Some(-623.0)),
    (9883.0, Some(9190.0), -5.0, Some(698.0)),
    (9979.0, Some(9281.0), -23.0, Some(720.0)),
    (10363.0, Some(9390.0), 55.0, Some(917.0)),
    (9568.0, Some(9527.0), -65.0, Some(106.0)),
    (9154.0, Some(9720.0), -326.0, Some(-240.0)),
    (9215.0, Some(9953.0), -294.0, Some(-444.0)),
    (9394.0, Some(10108.0), -420.0, Some(-294.0)),
    (9841.0, Some(10168.0), 35.0, Some(-362.0)),
    (10299.0, Some(10182.0), 247.0, Some(-130.0)),
    (10620.0, Some(10237.0), 429.0, Some(-46.0)),
    (11139.0, Some(10366.0), 302.0, Some(471.0)),
    (11379.0, Some(10492.0), 64.0, Some(823.0)),
    (10809.0, Some(10589.0), -5.0, Some(225.0)),
    (10499.0, Some(10669.0), -23.0, Some(-147.0)),
    (10164.0, Some(10774.0), 55.0, Some(-666.0)),
    (11091.0, Some(10897.0), -65.0, Some(259.0)),
    (10731.0, Some(11005.0), -326.0, Some(51.0)),
    (10672.0, Some(11077.0), -294.0, Some(-111.0)),
    (10255.0, Some(11151.0), -420.0, Some(-476.0)),
    (10893.0, Some(11295.0), 35.0, Some(-437.0)),
    (11776.0, Some(11527.0), 247.0, Some(2.0)),
    (12103.0, Some(11787.0), 429.0, Some(-113.0)),
    (12247.0, Some(12095.0), 302.0, Some(-150.0)),
    (11983.0, Some(12487.0), 64.0, Some(-567.0)),
    (11985.0, Some(12952.0), -5.0, Some(-962.0)),
    (12783.0, Some(13497.0), -23.0, Some(-691.0)),
    (13437.0, Some(14031.0), 55.0, Some(-650.0)),
    (14078.0, Some(14554.0), -65.0, Some(-411.0)),
    (15118.0, Some(15100.0), -326.0, Some(344.0)),
    (15688.0, Some(15660.0), -294.0, Some(322.0)),
    (16418.0, Some(16264.0), -420.0, Some(574.0)),
    (17798.0, Some(16855.0), 35.0, Some(908.0)),
    (17700.0, Some(17364.0), 247.0, Some(88.0)),
    (18712.0, Some(17795.0), 429.0, Some(488.0)),
    (18752.0, Some(18126.0), 302.0, Some(324.0)),
    (18907.0, Some(18391.0), 64.0, Some(452.0)),
    (19565.0, Some(18625.0), -5.0, Some(945.0)),
    (19397.0, Some(18711.0), -23.0, Some(709.0)),
    (19041.0, Some(18693.0), 55.0, Some(292.0)),
    (18799.0, Some(18688.0), -65.0, Some(176.0)),
    (18357.0, Some(18662.0), -326.0, Some(21.0)),
    (18806.0, None, -294.0, None),
    (18918.0, None, -420.0, None),
    (17348.0, None, 35.0, None),
    (17738.0, None, 247.0, None),
    (18535.0, None, 429.0, None),
    (18317.0, None, 302.0, None),
];

/// 2015 actual, 12-month Holt-Winters forecast, signed % error.
pub const HOLT_WINTERS_YEAR: [(f64, f64, f64); 12] = [
    (18907.0, 18507.0, 2.11),
    (19565.0, 17988.0, 8.05),
    (19397.0, 18384.0, 5.22),
    (19041.0, 19365.0, 1.70),
    (18799.0, 19546.0, 3.97),
    (18357.0, 19544.0, 6.47),
    (18806.0, 19873.0, 5.67),
    (18918.0, 20350.0, 7.57),
    (17348.0, 21222.0, 22.33),
    (17738.0, 21927.0, 23.62),
    (18535.0, 22487.0, 21.32),
    (18317.0, 22686.0, 23.85),
];

/// 2015 actual, 12-month ARIMA(0,2,1) forecast, signed % error.
pub const ARIMA_YEAR: [(f64, f64, f64); 12] = [
    (18907.0, 18569.0, -1.79),
    (19565.0, 18717.0, -4.33),
    (19397.0, 18903.0, -2.55),
    (19041.0, 19102.0, 0.32),
    (18799.0, 19305.0, 2.69),
    (18357.0, 19507.0, 6.26),
    (18806.0, 19708.0, 4.80),
    (18918.0, 19904.0, 5.21),
    (17348.0, 20096.0, 15.84),
    (17738.0, 20282.0, 14.34),
    (18535.0, 20463.0, 10.40),
    (18317.0, 20638.0, 12.67),
];

/// January to June 2015: actual trend, actual seasonal, actual sum,
/// forecast trend, past seasonal, forecast sum, % error.
pub const TREND_FORECAST: [[f64; 7]; 6] = [
    [18391.0, 64.0, 18455.0, 20029.0, 61.0, 20090.0, 8.86],
    [18625.0, -5.0, 18620.0, 20801.0, -131.0, 20670.0, 11.01],
    [18710.0, -23.0, 18687.0, 21439.0, -90.0, 21349.0, 14.30],
    [18693.0, 55.0, 18748.0, 21995.0, 93.0, 22088.0, 17.82],
    [18688.0, -65.0, 18623.0, 22544.0, 1.0, 22545.0, 21.06],
    [18662.0, -326.0, 18336.0, 23091.0, -221.0, 22870.0, 24.73],
];

/// Min, max, mean and SD of |% error| for methods 1 to 5.
pub const METHOD_SUMMARY: [[f64; 4]; 5] = [
    [1.7, 23.85, 10.99, 8.93],
    [0.84, 14.1, 3.80, 3.77],
    [8.86, 24.73, 16.30, 6.06],
    [0.32, 15.84, 6.77, 5.23],
    [0.11, 9.24, 2.41, 2.55],
];

/// July 2011 to June 2014: trend, seasonal and sum from the 2010-2014 window,
/// the same from the 2011-2015 window, then % variation.
pub const STRUCTURAL: [[f64; 7]; 36] = [
    [8792.0, -264.0, 8498.0, 8792.0, -258.0, 8534.0, 0.36],
    [8812.0, -452.0, 8360.0, 8812.0, -477.0, 8335.0, -0.30],
    [8916.0, -82.0, 8834.0, 8916.0, -19.0, 8897.0, 0.71],
    [9000.0, 336.0, 9336.0, 9000.0, 134.0, 9134.0, -2.16],
    [9057.0, 417.0, 9474.0, 9057.0, 325.0, 9382.0, -0.97],
    [9100.0, 332.0, 9432.0, 9100.0, 195.0, 9295.0, -1.45],
    [9135.0, 61.0, 9196.0, 9135.0, 77.0, 9212.0, 0.17],
    [9190.0, -131.0, 9059.0, 9190.0, 214.0, 9404.0, 3.80],
    [9281.0, -90.0, 9191.0, 9281.0, 118.0, 9399.0, 2.26],
    [9390.0, 93.0, 9483.0, 9390.0, 21.0, 9411.0, -0.76],
    [9527.0, 1.0, 9528.0, 9527.0, -40.0, 9487.0, -0.43],
    [9720.0, -221.0, 9499.0, 9720.0, -289.0, 9431.0, -0.72],
    [9952.0, -264.0, 9688.0, 9952.0, -258.0, 9694.0, -0.06],
    [10108.0, -452.0, 9656.0, 10108.0, -477.0, 9631.0, -0.26],
    [10168.0, -82.0, 10086.0, 10168.0, -19.0, 10149.0, 0.62],
    [10181.0, 336.0, 10517.0, 10181.0, 134.0, 10315.0, -1.92],
    [10236.0, 417.0, 10653.0, 10236.0, 325.0, 10561.0, -0.86],
    [10366.0, 332.0, 10698.0, 10366.0, 195.0, 10561.0, -1.28],
    [10492.0, 61.0, 10553.0, 10492.0, 77.0, 10569.0, 0.15],
    [10582.0, -131.0, 10451.0, 10589.0, 214.0, 10803.0, 3.37],
    [10669.0, -90.0, 10579.0, 10669.0, 118.0, 10787.0, 1.97],
    [10774.0, 93.0, 10867.0, 10774.0, 21.0, 10795.0, -0.66],
    [10897.0, 1.0, 10898.0, 10897.0, -40.0, 10857.0, -0.37],
    [11005.0, -221.0, 10784.0, 11005.0, -289.0, 10716.0, -0.63],
    [11077.0, -264.0, 10813.0, 11077.0, -258.0, 10819.0, 0.06],
    [11151.0, -452.0, 10699.0, 11151.0, -477.0, 10674.0, -0.23],
    [11295.0, -82.0, 11213.0, 11295.0, -19.0, 11276.0, 0.56],
    [11527.0, 336.0, 11863.0, 11526.0, 134.0, 11660.0, -1.71],
    [11787.0, 417.0, 12204.0, 11787.0, 325.0, 12112.0, -0.75],
    [12095.0, 332.0, 12427.0, 12095.0, 195.0, 12290.0, -1.10],
    [12487.0, 61.0, 12548.0, 12487.0, 77.0, 12564.0, 0.13],
    [12952.0, -131.0, 12821.0, 12952.0, 214.0, 13166.0, 2.69],
    [13497.0, -90.0, 13407.0, 13497.0, 118.0, 13615.0, 1.55],
    [14031.0, 93.0, 14124.0, 14031.0, 21.0, 14052.0, -0.51],
    [14553.0, 1.0, 14554.0, 14553.0, -40.0, 14513.0, -0.28],
    [15100.0, -221.0, 14879.0, 15100.0, -289.0, 14811.0, -0.46],
];
