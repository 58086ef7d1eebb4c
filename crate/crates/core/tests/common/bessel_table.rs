#![allow(clippy::excessive_precision)]

// (nu, x, J, J', Y, Y') reference values computed with mpmath at 40 digits.
pub const BESSEL_TABLE: &[(f64, f64, f64, f64, f64, f64)] = &[
    (
        0.0,
        0.001,
        9.99999750000015625e-1,
        -4.99999937500002604e-4,
        -4.47141661137592327,
        6.36622167231139428e+2,
    ),
    (
        0.0,
        0.05,
        9.99375097649468581e-1,
        -2.49921883137596991e-2,
        -1.97931100081720967,
        1.27898551711749704e+1,
    ),
    (
        0.0,
        0.5,
        9.38469807240812904e-1,
        -2.42268457674873886e-1,
        -4.44518733506706557e-1,
        1.47147239267024307,
    ),
    (
        0.0,
        1.0,
        7.65197686557966551e-1,
        -4.40050585744933516e-1,
        8.8256964215676958e-2,
        7.81212821300288717e-1,
    ),
    (
        0.0,
        1.9,
        2.81818559374385471e-1,
        -5.81157072713434073e-1,
        4.96819971283820206e-1,
        1.64405772331595263e-1,
    ),
    (
        0.0,
        2.0,
        2.23890779141235668e-1,
        -5.76724807756873387e-1,
        5.1037567264974512e-1,
        1.07032431540937547e-1,
    ),
    (
        0.0,
        2.1,
        1.66606980331990327e-1,
        -5.68292135757038669e-1,
        5.18293737513760729e-1,
        5.16786121304235821e-2,
    ),
    (
        0.0,
        5.0,
        -1.77596771314338304e-1,
        3.27579137591465222e-1,
        -3.0851762524903378e-1,
        -1.47863143391226845e-1,
    ),
    (
        0.0,
        10.0,
        -2.45935764451348335e-1,
        -4.34727461688614367e-2,
        5.56711672835993914e-2,
        -2.49015424206953884e-1,
    ),
    (
        0.0,
        30.0,
        -8.63679835810402113e-2,
        1.18751062616622937e-1,
        -1.17295731686664025e-1,
        -8.44255706617472349e-2,
    ),
    (
        0.0,
        75.0,
        3.46439138050970561e-2,
        8.51399950448291039e-2,
        -8.53690476477756099e-2,
        3.52137851605804857e-2,
    ),
    (
        0.0,
        200.0,
        -1.54374399305650916e-2,
        5.43045381823782227e-2,
        -5.42657752498179107e-2,
        -1.53018245803899892e-2,
    ),
    (
        0.0,
        500.0,
        -3.41005568807319983e-2,
        -1.04726134703722928e-2,
        1.05067087398313741e-2,
        -3.41110806291371359e-2,
    ),
    (
        0.0,
        1000.0,
        2.47866861524201746e-2,
        -4.72831190708952392e-3,
        4.7159179776228134e-3,
        2.47843312923517789e-2,
    ),
    (
        0.5,
        0.001,
        2.52313210149809407e-2,
        1.26156520970495713e+1,
        -2.52313126045400417e+1,
        1.26156815335910358e+4,
    ),
    (
        0.5,
        0.05,
        1.78338082402197423e-1,
        1.78040802714706408,
        -3.56378885116903831,
        3.58162265940925805e+1,
    ),
    (
        0.5,
        0.5,
        5.40973789934528091e-1,
        4.49272090308876789e-1,
        -9.9024588024340488e-1,
        1.53121967017793297,
    ),
    (
        0.5,
        1.0,
        6.7139670714180309e-1,
        9.54005144474745343e-2,
        -4.3109886801837608e-1,
        8.8694614115099113e-1,
    ),
    (
        0.5,
        1.9,
        5.47762303682864742e-1,
        -3.31282943999688476e-1,
        1.87134969346303018e-1,
        4.98516259118048158e-1,
    ),
    (
        0.5,
        2.0,
        5.13016136561827752e-1,
        -3.63039744546705407e-1,
        2.34785710406248469e-1,
        4.54319708960265634e-1,
    ),
    (
        0.5,
        2.1,
        4.75276737643759996e-1,
        -3.91125685482582475e-1,
        2.77964557472163429e-1,
        4.09094700150387751e-1,
    ),
    (
        0.5,
        5.0,
        -3.4216798479816181e-1,
        1.35434507664924581e-1,
        -1.012177091851084e-1,
        -3.3204621387965097e-1,
    ),
    (
        0.5,
        10.0,
        -1.37263735755050481e-1,
        -2.04845679543645629e-1,
        2.11708866331398153e-1,
        -1.47849179071620389e-1,
    ),
    (
        0.5,
        30.0,
        -1.43929653370399889e-1,
        2.48691181550043563e-2,
        -2.24702905988310248e-2,
        -1.43555148527086039e-1,
    ),
    (
        0.5,
        75.0,
        -3.5727009681702581e-2,
        8.51607589865915654e-2,
        -8.49225789220468815e-2,
        -3.51608591555556018e-2,
    ),
    (
        0.5,
        200.0,
        -4.9270523842854475e-2,
        2.7609797456787366e-2,
        -2.74866211471802299e-2,
        -4.92018072899865244e-2,
    ),
    (
        0.5,
        500.0,
        -1.66912591746429767e-2,
        -3.15212448162894479e-2,
        3.15379360754640909e-2,
        -1.67227971107184408e-2,
    ),
    (
        0.5,
        1000.0,
        2.08632666050938277e-2,
        1.41791377376247474e-2,
        -1.41895693709272943e-2,
        2.08703613897792914e-2,
    ),
    (
        1.0,
        0.001,
        4.99999937500002604e-4,
        4.99999812500013021e-1,
        -6.36622167231139428e+2,
        6.36617695814528052e+5,
    ),
    (
        1.0,
        0.05,
        2.49921883137596991e-2,
        4.99531331374274598e-1,
        -1.27898551711749704e+1,
        2.53817792422682198e+2,
    ),
    (
        1.0,
        0.5,
        2.42268457674873886e-1,
        4.53932891891065131e-1,
        -1.47147239267024307,
        2.49842605183377958,
    ),
    (
        1.0,
        1.0,
        4.40050585744933516e-1,
        3.25147100813033035e-1,
        -7.81212821300288717e-1,
        8.69469785515965675e-1,
    ),
    (
        1.0,
        1.9,
        5.81157072713434073e-1,
        -2.40535841590008833e-2,
        -1.64405772331595263e-1,
        5.83349325142554555e-1,
    ),
    (
        1.0,
        2.0,
        5.76724807756873387e-1,
        -6.44716247372010255e-2,
        -1.07032431540937547e-1,
        5.63891888420213893e-1,
    ),
    (
        1.0,
        2.1,
        5.68292135757038669e-1,
        -1.04008322409456658e-1,
        -5.16786121304235821e-2,
        5.42902600433010053e-1,
    ),
    (
        1.0,
        5.0,
        -3.27579137591465222e-1,
        -1.1208094379604526e-1,
        1.47863143391226845e-1,
        -3.38090253927279149e-1,
    ),
    (
        1.0,
        10.0,
        4.34727461688614367e-2,
        -2.50283039068234479e-1,
        2.49015424206953884e-1,
        3.0769624862904003e-2,
    ),
    (
        1.0,
        30.0,
        -1.18751062616622937e-1,
        -8.24096148271527801e-2,
        8.44255706617472349e-2,
        -1.20109917375388933e-1,
    ),
    (
        1.0,
        75.0,
        -8.51399950448291039e-2,
        3.57791137390281109e-2,
        -3.52137851605804857e-2,
        -8.48995305123012034e-2,
    ),
    (
        1.0,
        200.0,
        -5.43045381823782227e-2,
        -1.51659172396532005e-2,
        1.53018245803899892e-2,
        -5.43422843727198606e-2,
    ),
    (
        1.0,
        500.0,
        1.04726134703722928e-2,
        -3.41215021076727429e-2,
        3.41110806291371359e-2,
        1.04384865785730998e-2,
    ),
    (
        1.0,
        1000.0,
        4.72831190708952392e-3,
        2.4781957840513085e-2,
        -2.47843312923517789e-2,
        4.74070230891516518e-3,
    ),
    (
        1.5,
        0.001,
        8.41044089902305619e-6,
        1.26156596664463564e-2,
        -2.52313378358610567e+4,
        3.78469815224789805e+7,
    ),
    (
        1.5,
        0.05,
        2.97279687491014714e-3,
        8.91541761548930088e-2,
        -7.14541151057829637e+1,
        2.14005966432231987e+3,
    ),
    (
        1.5,
        0.5,
        9.17016996256513026e-2,
        2.65868691057574183e-1,
        -2.52146555042133785,
        6.57415077102060867,
    ),
    (
        1.5,
        1.0,
        2.40297839123427011e-1,
        3.10949948456662574e-1,
        -1.10249557516017917,
        1.22264449472189268,
    ),
    (
        1.5,
        1.9,
        4.75430918653073934e-1,
        1.72422104746227425e-1,
        -4.49270214553231575e-1,
        5.41821980835696366e-1,
    ),
    (
        1.5,
        2.0,
        4.91293778687162345e-1,
        1.44545802546455993e-1,
        -3.95623281358703517e-1,
        5.31503171425276107e-1,
    ),
    (
        1.5,
        2.1,
        5.04286813493001522e-1,
        1.15071870863044623e-1,
        -3.42912662657015506e-1,
        5.22902173655745933e-1,
    ),
    (
        1.5,
        5.0,
        -1.69651306144740762e-1,
        -2.91272592954739581e-1,
        3.2192444296114013e-1,
        -1.97795042073450439e-1,
    ),
    (
        1.5,
        10.0,
        1.97982492755893105e-1,
        -1.66961109668434447e-1,
        1.58434622388190297e-1,
        1.87943672973169608e-1,
    ),
    (
        1.5,
        30.0,
        -2.72679457111776878e-2,
        -1.42566256084841005e-1,
        1.43180643683772188e-1,
        -2.96293227830196342e-2,
    ),
    (
        1.5,
        75.0,
        -8.53989390511362493e-2,
        -3.4019030900679856e-2,
        3.45947086294086225e-2,
        -8.5614473094635054e-2,
    ),
    (
        1.5,
        200.0,
        -2.77329737663945022e-2,
        -4.90625265396065162e-2,
        4.91330907371185738e-2,
        -2.78551193277086192e-2,
    ),
    (
        1.5,
        500.0,
        3.15045535571148049e-2,
        -1.67857728353143211e-2,
        1.67543350467939049e-2,
        3.14876730703237092e-2,
    ),
    (
        1.5,
        1000.0,
        -1.41687061043222005e-2,
        2.0884519664250311e-2,
        -2.0877456174464755e-2,
        -1.41582531866655972e-2,
    ),
    (
        2.0,
        0.001,
        1.24999989583333659e-7,
        2.49999958333335286e-4,
        -1.27323986304566748e+6,
        2.54647908946916773e+9,
    ),
    (
        2.0,
        0.05,
        3.12434900919384432e-4,
        1.24947922769843219e-2,
        -5.09614895846181607e+2,
        2.03718059786760893e+4,
    ),
    (
        2.0,
        0.5,
        3.06040234586826413e-2,
        1.19852363840143321e-1,
        -5.44137083717426572,
        2.02940109560268198e+1,
    ),
    (
        2.0,
        1.0,
        1.1490348493190048e-1,
        2.10243615881132555e-1,
        -1.65068260681625439,
        2.52015239233222007,
    ),
    (
        2.0,
        1.9,
        3.29925727692387237e-1,
        2.33866833037236981e-1,
        -6.69878679001288903e-1,
        5.40729679248708846e-1,
    ),
    (
        2.0,
        2.0,
        3.52834028615637719e-1,
        2.23890779141235668e-1,
        -6.17408104190682666e-1,
        5.1037567264974512e-1,
    ),
    (
        2.0,
        2.1,
        3.74623625150903643e-1,
        2.11507730851416151e-1,
        -5.67511463352259378e-1,
        4.88808495824109159e-1,
    ),
    (
        2.0,
        5.0,
        4.65651162777522155e-2,
        -3.46205184102566108e-1,
        3.67662882605524518e-1,
        7.97990349017037603e-4,
    ),
    (
        2.0,
        10.0,
        2.54630313685120623e-1,
        -7.45331656816268784e-3,
        -5.86808244220861464e-3,
        2.50189040695395607e-1,
    ),
    (
        2.0,
        30.0,
        7.84512460732653489e-2,
        -1.2398114568817396e-1,
        1.22924103064113841e-1,
        7.62306304574729788e-2,
    ),
    (
        2.0,
        75.0,
        -3.69143136729591656e-2,
        -8.41556133468835262e-2,
        8.44300133768267969e-2,
        -3.74652521839625336e-2,
    ),
    (
        2.0,
        200.0,
        1.48943945487413094e-2,
        -5.44534821278656358e-2,
        5.44187934956218106e-2,
        1.47576366454337711e-2,
    ),
    (
        2.0,
        500.0,
        3.41424473346134874e-2,
        1.03360436810338389e-2,
        -1.03702644173148256e-2,
        3.41525616868063952e-2,
    ),
    (
        2.0,
        1000.0,
        -2.47772295286059955e-2,
        4.77786636614673591e-3,
        -4.76548664020751696e-3,
        -2.47748003190713639e-2,
    ),
    (
        3.5,
        0.001,
        2.40298322080584213e-13,
        8.4104410058223091e-10,
        -3.78469916150014991e+11,
        1.32464463083106419e+15,
    ),
    (
        3.5,
        0.05,
        2.12366230382791645e-7,
        1.48644562846098842e-5,
        -4.28296857634475095e+5,
        2.99764963512957609e+7,
    ),
    (
        3.5,
        0.5,
        6.62378568145942361e-4,
        4.59975784235812797e-3,
        -1.38864008672424884e+2,
        9.57909513284689569e+2,
    ),
    (
        3.5,
        1.0,
        7.18621201896270046e-3,
        2.43450681621084907e-2,
        -1.3279443712150628e+1,
        4.36016651350650365e+1,
    ),
    (
        3.5,
        1.9,
        5.85640660585310427e-2,
        9.50369198720632337e-2,
        -1.90996397577595188,
        2.62184569989376902,
    ),
    (
        3.5,
        2.0,
        6.85175499851270696e-2,
        1.04018818994943394e-1,
        -1.67492829975205584,
        2.10290389212179398,
    ),
    (
        3.5,
        2.1,
        7.936317678716693e-2,
        1.12861034605725866e-1,
        -1.48527731315090934,
        1.70762239874552047,
    ),
    (
        3.5,
        5.0,
        4.10028507256058114e-1,
        -4.66427539679233272e-2,
        -2.75520679993476524e-2,
        3.13658822561335834e-1,
    ),
    (
        3.5,
        10.0,
        -9.96532509649838985e-2,
        2.31537121419562777e-1,
        -2.40523862195660828e-1,
        -7.9995127846459774e-2,
    ),
    (
        3.5,
        30.0,
        5.08017555110580412e-2,
        1.35275987322992016e-1,
        -1.37049251189237481e-1,
        5.27774342726192831e-2,
    ),
    (
        3.5,
        75.0,
        8.75530091924467247e-2,
        2.82252450240096172e-2,
        -2.88409508115937408e-2,
        8.7652278305097601e-2,
    ),
    (
        3.5,
        200.0,
        2.89543369973034662e-2,
        4.83478283389057468e-2,
        -4.84275002994126486e-2,
        2.90710987634767298e-2,
    ),
    (
        3.5,
        500.0,
        -3.13357506921549483e-2,
        1.70996367508307501e-2,
        -1.70687091474457381e-2,
        -3.13179291011512073e-2,
    ),
    (
        3.5,
        1000.0,
        1.40641772407051665e-2,
        -2.09549973437492624e-2,
        2.09480908594767745e-2,
        1.40536186843957313e-2,
    ),
    (
        5.0,
        0.001,
        2.60416655815972416e-19,
        1.30208325737847397e-15,
        -2.44462007868026409e+17,
        1.22231000878238043e+21,
    ),
    (
        5.0,
        0.05,
        8.13717316067309451e-11,
        8.13683410674589814e-9,
        -7.82400620015300476e+8,
        7.82351717429274406e+10,
    ),
    (
        5.0,
        0.5,
        8.05362724135747409e-6,
        8.0200203950712856e-5,
        -7.94630147880747334e+3,
        7.89637422272552211e+4,
    ),
    (
        5.0,
        1.0,
        2.49757730211234431e-4,
        1.22785031305378289e-3,
        -2.60405866625812221e+2,
        1.26875091010008898e+3,
    ),
    (
        5.0,
        1.9,
        5.53849301361588114e-3,
        1.36784695527081636e-2,
        -1.24991128079446797e+1,
        2.96279698657114577e+1,
    ),
    (
        5.0,
        2.0,
        7.03962975587168548e-3,
        1.63966454178892204e-2,
        -9.93598912848197498,
        2.20740295948743368e+1,
    ),
    (
        5.0,
        2.1,
        8.8284171173864647e-3,
        1.94325456768610594e-2,
        -8.01197342049728863,
        1.67027940727877793e+1,
    ),
    (
        5.0,
        5.0,
        2.6114054612017009e-1,
        1.30091814338478088e-1,
        -4.53694822491101881e-1,
        2.61552535117408686e-1,
    ),
    (
        5.0,
        10.0,
        -2.3406152818679364e-1,
        -1.02571922008611715e-1,
        1.35403047689362303e-1,
        -2.12651035712774935e-1,
    ),
    (
        5.0,
        30.0,
        -1.43240295512077077e-1,
        -2.87356177359741728e-2,
        3.16273592892644333e-2,
        -1.41802467662964324e-1,
    ),
    (
        5.0,
        75.0,
        -7.8523977013751367e-2,
        4.88029440057909592e-2,
        -4.83836712969700994e-2,
        -7.80270977537745571e-2,
    ),
    (
        5.0,
        200.0,
        -5.51326789440146776e-2,
        -1.1878004792940351e-2,
        1.20196408322001075e-2,
        -5.51456879777411399e-2,
    ),
    (
        5.0,
        500.0,
        9.65123643535436363e-3,
        -3.43613533856673757e-2,
        3.43534017189457524e-2,
        9.61640188719166018e-3,
    ),
    (
        5.0,
        1000.0,
        5.02540694523318607e-3,
        2.47231379689286059e-2,
        -2.47259567197406907e-2,
        5.0377080398809661e-3,
    ),
    (
        8.5,
        0.001,
        7.32203876188281312e-34,
        6.22373290906334494e-30,
        -5.11445287092967488e+31,
        4.347284906193871e+35,
    ),
    (
        8.5,
        0.05,
        2.02231358766899135e-19,
        3.43787987992520761e-17,
        -1.8517839734014486e+17,
        3.14797102785863126e+19,
    ),
    (
        8.5,
        0.5,
        6.35358691926902014e-11,
        1.07843673090088442e-9,
        -5.90439732754781554e+8,
        1.00177688231316758e+10,
    ),
    (
        8.5,
        1.0,
        2.25521975541492438e-8,
        1.90503732924535647e-7,
        -1.67229569786851143e+6,
        1.41024482694580684e+7,
    ),
    (
        8.5,
        1.9,
        4.92709502255517442e-6,
        2.15450247485141642e-5,
        -7.80103549407881777e+3,
        3.38920874348461343e+4,
    ),
    (
        8.5,
        2.0,
        7.54118852847162905e-6,
        3.1248135056370361e-5,
        -5.1116883097626526e+3,
        2.10284040659565597e+4,
    ),
    (
        8.5,
        2.1,
        1.12930870358980925e-5,
        4.4447849982603968e-5,
        -3.42393691064357299e+3,
        1.33679690878074795e+4,
    ),
    (
        8.5,
        5.0,
        1.02434320641764512e-2,
        1.45269437843847201e-2,
        -4.5740952056572308,
        5.94296229770566957,
    ),
    (
        8.5,
        10.0,
        3.16849995521241385e-1,
        1.67659899238093192e-2,
        -1.03744466877037426e-1,
        1.95431906030421612e-1,
    ),
    (
        8.5,
        30.0,
        -3.07832536879152597e-2,
        1.40142220001432308e-1,
        -1.45514960087861986e-1,
        -2.68935031098282829e-2,
    ),
    (
        8.5,
        75.0,
        7.59341970411155716e-3,
        9.14738899837455296e-2,
        -9.21164509335650984e-2,
        8.16674641915897313e-3,
    ),
    (
        8.5,
        200.0,
        -4.35723081547045906e-2,
        3.59574759162957306e-2,
        -3.58806546497886199e-2,
        -4.34432135127279334e-2,
    ),
    (
        8.5,
        500.0,
        -1.89181942879729813e-2,
        -3.02343602279039687e-2,
        3.02576412600742432e-2,
        -1.89457362460458814e-2,
    ),
    (
        8.5,
        1000.0,
        2.13608499989537932e-2,
        1.34185329875922882e-2,
        -1.34296976587285784e-2,
        2.13667963279970171e-2,
    ),
    (
        10.0,
        0.001,
        2.69114439430499878e-40,
        2.69114438207252424e-36,
        -1.18280493779904166e+38,
        1.18280493122790309e+42,
    ),
    (
        10.0,
        0.05,
        2.62792143897877341e-23,
        5.2557831521875037e-21,
        -1.21127633651867488e+21,
        2.4225190261803698e+23,
    ),
    (
        10.0,
        0.5,
        2.61317736082280309e-13,
        5.22041286768337371e-12,
        -1.21963623349569631e+11,
        2.43588164184675135e+12,
    ),
    (
        10.0,
        1.0,
        2.63061512368745321e-10,
        2.61863505622442184e-9,
        -1.21618014278689189e+8,
        1.20939993784815991e+9,
    ),
    (
        10.0,
        1.9,
        1.51956151338009032e-7,
        7.86554855198094679e-7,
        -2.13405455087467099e+5,
        1.10036967764114817e+6,
    ),
    (
        10.0,
        2.0,
        2.51538628271673671e-7,
        1.23465029377469584e-6,
        -1.29184542208039283e+5,
        6.31362881664285396e+5,
    ),
    (
        10.0,
        2.1,
        4.0589914106619263e-7,
        1.89377944405866576e-6,
        -8.02303049014121861e+4,
        3.7254025703512903e+5,
    ),
    (
        10.0,
        5.0,
        1.46780264731047413e-3,
        2.58467784485473925e-3,
        -2.51291100956100967e+1,
        4.24943370028436124e+1,
    ),
    (
        10.0,
        10.0,
        2.07486106633358858e-1,
        8.43695786317611882e-2,
        -3.59814152183402722e-1,
        1.60514886378158384e-1,
    ),
    (
        10.0,
        30.0,
        -1.29876893998588768e-1,
        -6.83511031373541331e-2,
        7.50567021223971133e-2,
        -1.23890017659157938e-1,
    ),
    (
        10.0,
        75.0,
        -8.04178678918944545e-2,
        -4.48447603923869317e-2,
        4.57983350613249887e-2,
        -8.00126692990939766e-2,
    ),
    (
        10.0,
        200.0,
        1.53016881368016411e-3,
        -5.63668727822125032e-2,
        5.64334445179960717e-2,
        1.38682347398703488e-3,
    ),
    (
        10.0,
        500.0,
        3.49826375038151068e-2,
        7.01403667737590095e-3,
        -7.05043997301597925e-3,
        3.49827110674353434e-2,
    ),
    (
        10.0,
        1000.0,
        -2.45206223060365582e-2,
        5.96096539504209661e-3,
        -5.94900057416266858e-3,
        -2.45164245143124809e-2,
    ),
    (
        15.5,
        0.001,
        1.31482463395067643e-64,
        2.03797817863923139e-60,
        -1.56189055193537715e+62,
        2.42093035011400509e+66,
    ),
    (
        15.5,
        0.05,
        2.83717716287965621e-38,
        8.79520621730111637e-36,
        -7.23826106211371128e+35,
        2.24384844945495232e+38,
    ),
    (
        15.5,
        0.5,
        8.93835651809262538e-23,
        2.76953593090872156e-21,
        -2.29872903334671806e+20,
        7.12209541115201434e+21,
    ),
    (
        15.5,
        1.0,
        4.09529100695981136e-18,
        6.33528032583992733e-17,
        -5.02508273491855025e+15,
        7.771528176244955e+16,
    ),
    (
        15.5,
        1.9,
        8.2367671978859964e-14,
        6.67189505826429437e-13,
        -2.51225427589547458e+11,
        2.03293434403091314e+12,
    ),
    (
        15.5,
        2.0,
        1.8132851979389266e-13,
        1.39426811055553022e-12,
        -1.14212614760671133e+11,
        8.77230342919176098e+11,
    ),
    (
        15.5,
        2.1,
        3.83877335352078913e-13,
        2.80885782232510693e-12,
        -5.39966271636734336e+10,
        3.94614138470038411e+11,
    ),
    (
        15.5,
        5.0,
        1.93449042138348694e-7,
        5.69719816384809048e-7,
        -1.1218833839566121e+5,
        3.27776422262540342e+5,
    ),
    (
        15.5,
        10.0,
        2.68345921180125225e-3,
        3.26136863569715303e-3,
        -1.00725260506499685e+1,
        1.14821036062044888e+1,
    ),
    (
        15.5,
        30.0,
        -1.4074176723926558e-1,
        -5.71452109924657828e-2,
        7.04205841173328399e-2,
        -1.22184482109615457e-1,
    ),
    (
        15.5,
        75.0,
        3.31081597231799829e-2,
        -8.5411920644449629e-2,
        8.70583094523428473e-2,
        3.17881217797634584e-2,
    ),
    (
        15.5,
        200.0,
        5.05893349284490672e-2,
        2.49647910281646158e-2,
        -2.51676413761771917e-2,
        5.05006432249647466e-2,
    ),
    (
        15.5,
        500.0,
        -2.66723984947116017e-2,
        2.37310090556856601e-2,
        -2.37156972269683624e-2,
        -2.66358542603860011e-2,
    ),
    (
        15.5,
        1000.0,
        1.15905823631535731e-2,
        -2.24163748976748005e-2,
        2.24132679648076741e-2,
        1.15779820876831093e-2,
    ),
    (
        20.0,
        0.001,
        3.9199043029592633e-85,
        7.83980859658542112e-81,
        -4.06017420300761872e+82,
        8.12034839533056847e+86,
    ),
    (
        20.0,
        0.05,
        3.73820084329796145e-51,
        1.49527588707406505e-48,
        -4.2575412175969535e+48,
        1.70301088500062585e+51,
    ),
    (
        20.0,
        0.5,
        3.72720196170471446e-31,
        1.49043701012078077e-29,
        -4.27143012156590644e+28,
        1.70800991559722858e+30,
    ),
    (
        20.0,
        1.0,
        3.87350300852465772e-25,
        7.73777839506721877e-24,
        -4.11397031483550528e+22,
        8.21710646580835422e+23,
    ),
    (
        20.0,
        1.9,
        1.41144802678476551e-19,
        1.47933712308539988e-18,
        -1.13273664725844306e+17,
        1.1866756523290064e+18,
    ),
    (
        20.0,
        2.0,
        3.91897280509075384e-19,
        3.90027046827299011e-18,
        -4.08165138899836663e+16,
        4.06010580716822225e+17,
    ),
    (
        20.0,
        2.1,
        1.0347456658482179e-18,
        9.80285931309285167e-18,
        -1.54667861638516641e+16,
        1.46445207520482555e+17,
    ),
    (
        20.0,
        5.0,
        2.77033005212894169e-11,
        1.07469382098404478e-10,
        -5.93396529691432069e+8,
        2.29402254938548333e+9,
    ),
    (
        20.0,
        10.0,
        1.15133692478133978e-5,
        2.01195390289357611e-5,
        -1.59748384826962598e+3,
        2.73780315083609321e+3,
    ),
    (
        20.0,
        30.0,
        4.83101999340406454e-3,
        1.25705366858809436e-1,
        -1.68481539487426767e-1,
        8.61626504801065671e-3,
    ),
    (
        20.0,
        75.0,
        6.89610472215219017e-3,
        -9.02548496412557913e-2,
        9.3591198265063702e-2,
        5.97498240957797355e-3,
    ),
    (
        20.0,
        200.0,
        3.74509387108600433e-2,
        4.20788505361241931e-2,
        -4.23857428932286728e-2,
        3.73703722776194474e-2,
    ),
    (
        20.0,
        500.0,
        -3.55142229151273494e-2,
        3.63805662877660941e-3,
        -3.6053691568370722e-3,
        -3.54822069621631253e-2,
    ),
    (
        20.0,
        1000.0,
        2.33579679326793346e-2,
        -9.55715119981754739e-3,
        9.54737601498730168e-3,
        2.33485232021327496e-2,
    ),
    (
        30.5,
        0.001,
        1.41577851835893949e-134,
        4.31812447874749797e-130,
        -7.3714847211105447e+131,
        2.24830283868931194e+136,
    ),
    (
        30.5,
        0.05,
        9.32334676291757772e-83,
        5.68723412589364715e-80,
        -1.11938384520984664e+80,
        6.82823196946923955e+82,
    ),
    (
        30.5,
        0.5,
        2.94251531882492066e-52,
        1.79470079726249944e-50,
        -3.54723518383218996e+49,
        2.16351282663592249e+51,
    ),
    (
        30.5,
        1.0,
        4.44168872051907067e-43,
        1.35400985755256693e-41,
        -2.35090984755649478e+40,
        7.16628925652164128e+41,
    ),
    (
        30.5,
        1.9,
        1.38207553256057327e-34,
        2.21442308874538102e-33,
        -7.56595485344632309e+31,
        1.21209574283590404e+33,
    ),
    (
        30.5,
        2.0,
        6.5859180305773943e-34,
        1.00225968589078095e-32,
        -1.5880739239778077e+31,
        2.41642301381793289e+32,
    ),
    (
        30.5,
        2.1,
        2.90720266611028426e-33,
        4.21266464344125744e-32,
        -3.59838787002107187e+30,
        5.2134053393849256e+31,
    ),
    (
        30.5,
        5.0,
        7.6409222636597229e-22,
        4.59994566946290028e-21,
        -1.38460833748566278e+19,
        8.32788517126524362e+19,
    ),
    (
        30.5,
        10.0,
        6.33825368527175101e-13,
        1.82997973729170147e-12,
        -1.74306034484393533e+10,
        5.0115264700051799e+10,
    ),
    (
        30.5,
        30.0,
        1.22585024481868056e-1,
        4.07502115045287501e-2,
        -2.85944750416030688e-1,
        7.80548036866585409e-2,
    ),
    (
        30.5,
        75.0,
        3.68341070954812966e-2,
        -8.16738362568889274e-2,
        8.90724637286230965e-2,
        3.29415834854691924e-2,
    ),
    (
        30.5,
        200.0,
        -5.41627185022434332e-2,
        -1.66089862414932312e-2,
        1.69457611308346448e-2,
        -5.35727716149265363e-2,
    ),
    (
        30.5,
        500.0,
        3.52944782987106639e-2,
        5.42377746387361772e-3,
        -5.46938620162113452e-3,
        3.52342596082236878e-2,
    ),
    (
        30.5,
        1000.0,
        -2.50169016729428324e-2,
        -3.31318911785752706e-3,
        3.32725674429258265e-3,
        -2.50069313022359529e-2,
    ),
    (
        45.0,
        0.001,
        2.37595566026980096e-205,
        1.06918004686315438e-200,
        -2.9771401656757531e+202,
        1.33971307421577751e+207,
    ),
    (
        45.0,
        0.05,
        6.75278042590097828e-129,
        6.07749871332045761e-126,
        -1.04750294674579169e+126,
        9.42752056898887082e+128,
    ),
    (
        45.0,
        0.5,
        6.74370317602321654e-84,
        6.06896634221780512e-82,
        -1.04897705859857356e+81,
        9.44019749800496378e+82,
    ),
    (
        45.0,
        1.0,
        2.36307715362446295e-70,
        1.063127833210703e-68,
        -2.99410498866772641e+67,
        1.34700696072743971e+69,
    ),
    (
        45.0,
        1.9,
        8.1513197337521876e-58,
        1.92889159838761915e-56,
        -8.68555019869354741e+54,
        2.05522780977634042e+56,
    ),
    (
        45.0,
        2.0,
        8.17983926371602847e-57,
        1.83868478517219261e-55,
        -8.65610297182106309e+53,
        1.94565483160579479e+55,
    ),
    (
        45.0,
        2.1,
        7.33322542469459743e-56,
        1.56973070529302269e-54,
        -9.65642179204379448e+52,
        2.06692752336855061e+54,
    ),
    (
        45.0,
        5.0,
        5.89380160327873535e-39,
        5.27229678651372801e-38,
        -1.2076497507511927e+36,
        1.08000030806788166e+37,
    ),
    (
        45.0,
        10.0,
        1.37538103949585484e-25,
        6.03794776805133001e-25,
        -5.27494545239958022e+22,
        2.31296863940412434e+23,
    ),
    (
        45.0,
        30.0,
        3.91576988967273446e-6,
        4.42734321108593943e-6,
        -2.42533108772390576e+3,
        2.6770944790949878e+3,
    ),
    (
        45.0,
        75.0,
        2.08179838950224151e-2,
        8.04959478085666771e-2,
        -1.00869999603679641e-1,
        1.77076420982319421e-2,
    ),
    (
        45.0,
        200.0,
        -5.39723846303847182e-3,
        -5.54279933130912194e-2,
        5.69009736273011169e-2,
        -5.40870601056348027e-3,
    ),
    (
        45.0,
        500.0,
        -3.53170735610713898e-2,
        5.59251212947023795e-3,
        -5.57954686200413169e-3,
        -3.51681420909546671e-2,
    ),
    (
        45.0,
        1000.0,
        2.3534746080077133e-2,
        9.11027821467641106e-3,
        -9.13131845065855177e-3,
        2.35154829770511024e-2,
    ),
    (
        59.5,
        0.001,
        3.6184352178386564e-278,
        2.15296895431495632e-273,
        -1.47846946676399271e+275,
        8.7968933259821075e+279,
    ),
    (
        59.5,
        0.05,
        4.43845248488416991e-177,
        5.28175662294057937e-174,
        -1.20531827116263785e+174,
        1.43432822759016506e+177,
    ),
    (
        59.5,
        0.5,
        1.40212717444633808e-117,
        1.66847339747842659e-115,
        -3.81558466114452985e+114,
        4.54038268455860938e+116,
    ),
    (
        59.5,
        1.0,
        1.13953098321113233e-99,
        6.77926752567707721e-98,
        -4.69535449180635915e+96,
        2.79333458044428224e+98,
    ),
    (
        59.5,
        1.9,
        4.34390930414573648e-83,
        1.35964722562446145e-81,
        -1.2321795981996212e+80,
        3.85666617652434936e+81,
    ),
    (
        59.5,
        2.0,
        9.17542435950735742e-82,
        2.72817174006427485e-80,
        -5.83381371747393133e+78,
        1.73456205119017462e+80,
    ),
    (
        59.5,
        2.1,
        1.66975771131870148e-80,
        4.72808139627394656e-79,
        -3.20590348753993784e+77,
        9.07763714170307616e+78,
    ),
    (
        59.5,
        5.0,
        4.00251680689665676e-58,
        4.74642780009585221e-57,
        -1.34134130378462514e+55,
        1.5904532324967771e+56,
    ),
    (
        59.5,
        10.0,
        2.39029767190066698e-40,
        1.40233807210391292e-39,
        -2.27041391161637749e+37,
        1.33134458247259063e+38,
    ),
    (
        59.5,
        30.0,
        1.90059233527427137e-13,
        3.26580380212628073e-13,
        -3.25970806046302996e+10,
        5.56410330872530665e+10,
    ),
    (
        59.5,
        75.0,
        1.10239989810896864e-1,
        2.36772406452337165e-2,
        -4.20633875726613523e-2,
        6.79637098525522886e-2,
    ),
    (
        59.5,
        200.0,
        -5.98297260921759831e-5,
        -5.51268496837592515e-2,
        5.77411186655368167e-2,
        -2.15488045744614092e-4,
    ),
    (
        59.5,
        500.0,
        2.25569128915051347e-2,
        -2.76377930416694336e-2,
        2.78125256496387586e-2,
        2.23684295493440842e-2,
    ),
    (
        59.5,
        1000.0,
        -2.32843760042614272e-2,
        -9.74787808875631551e-3,
        9.77688203358278322e-3,
        -2.32480319900775802e-2,
    ),
    (
        60.0,
        0.001,
        1.0423784133801954e-280,
        6.25427047942676384e-276,
        -5.08948065536338058e+277,
        3.05368839278671643e+282,
    ),
    (
        60.0,
        0.05,
        9.04109892507195784e-179,
        1.08493150047173252e-175,
        -5.86783382891865748e+175,
        7.04139810833166836e+178,
    ),
    (
        60.0,
        0.5,
        9.03193271138930728e-119,
        1.08379490863731202e-116,
        -5.87399088009226805e+115,
        7.04854015364599007e+117,
    ),
    (
        60.0,
        1.0,
        1.03811497656452133e-100,
        6.2278388892169771e-99,
        -5.11109277530667112e+97,
        3.06622249007973457e+99,
    ),
    (
        60.0,
        1.9,
        5.4552577957110237e-84,
        1.72186319595734966e-82,
        -9.72974635335963626e+80,
        3.07098441253156879e+82,
    ),
    (
        60.0,
        2.0,
        1.18223721832096943e-82,
        3.5447730484434279e-81,
        -4.48989025379399419e+79,
        1.34620585527365667e+81,
    ),
    (
        60.0,
        2.1,
        2.20461425631373127e-81,
        6.29510194048919848e-80,
        -2.40786707399124495e+78,
        6.87533364273036339e+79,
    ),
    (
        60.0,
        5.0,
        8.16002403809351778e-59,
        9.75853067749318624e-58,
        -6.52410729378237272e+55,
        7.80123355111547517e+56,
    ),
    (
        60.0,
        10.0,
        6.9094332494399619e-41,
        4.08864593041073355e-40,
        -7.78709577501526094e+37,
        4.60577570368782134e+38,
    ),
    (
        60.0,
        30.0,
        9.80755764312862463e-14,
        1.70402448031064935e-13,
        -6.24662510447286794e+10,
        1.07837826362249173e+11,
    ),
    (
        60.0,
        75.0,
        9.16936402389072329e-2,
        4.37534504507956489e-2,
        -7.56058340741999604e-2,
        5.64951669833814203e-2,
    ),
    (
        60.0,
        200.0,
        3.41565000012719299e-2,
        -4.45327979804094207e-2,
        4.65844283162124678e-2,
        3.24554309299217327e-2,
    ),
    (
        60.0,
        500.0,
        3.53324048319784749e-2,
        -5.83551588596792801e-3,
        5.84187814483664945e-3,
        3.50711811978208934e-2,
    ),
    (
        60.0,
        1000.0,
        -1.02458518507920555e-2,
        -2.30355468591911586e-2,
        2.3082270887938173e-2,
        -1.02389768307871647e-2,
    ),
];
