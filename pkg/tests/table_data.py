"""Published running-time tables, transcribed verbatim.

Rows: (alpha, dispatcher, first procedure, second procedure, c, exact reference).
Dashed entries are None; numbers are kept as strings to preserve the printed precision.
"""

TABLES = {
    "p2": [
        ("0.99", "6.338", "6.338", None, None, "6.623"),
        ("0.98", "6.034", "6.034", None, None, "6.498"),
        ("0.97", "5.774", "5.774", None, None, "6.375"),
        ("0.96", "5.544", "5.544", None, None, "6.254"),
        ("0.95", "5.337", "5.337", None, None, "6.136"),
        ("0.94", "5.147", "5.147", None, None, "6.020"),
        ("0.93", "4.972", "4.972", None, None, "5.906"),
        ("0.92", "4.809", "4.809", None, None, "5.794"),
        ("0.91", "4.658", "4.658", None, None, "5.685"),
        ("0.9", "4.516", "4.516", None, None, "5.577"),
        ("0.89", "4.383", "4.383", None, None, "5.472"),
        ("0.88", "4.257", "4.257", None, None, "5.368"),
        ("0.87", "4.138", "4.138", None, None, "5.267"),
        ("0.86", "4.025", "4.025", None, None, "5.167"),
        ("0.85", "3.918", "3.918", None, None, "5.069"),
        ("0.84", "3.816", "3.816", None, None, "4.972"),
        ("0.83", "3.719", "3.719", None, None, "4.879"),
        ("0.82", "3.627", "3.627", "5.692", "1.8", "4.787"),
        ("0.81", "3.538", "3.538", "4.880", "1.8", "4.697"),
        ("0.8", "3.454", "3.454", "4.098", "1.9", "4.608"),
        ("0.79", "3.361", "3.373", "3.361", "1.9", "4.521"),
        ("0.78", "2.684", "3.295", "2.684", "1.9", "4.435"),
        ("0.77", "2.073", "3.220", "2.073", "1.9", "4.351"),
        ("0.76", "1.527", "3.149", "1.527", "2.0", "4.269"),
    ],
    "3sp-det": [
        ("0.99", "7.847", "7.847", None, None, "7.930"),
        ("0.98", "7.605", "7.605", None, None, "7.766"),
        ("0.97", "7.370", "7.370", None, None, "7.605"),
        ("0.96", "7.143", "7.143", None, None, "7.448"),
        ("0.95", "6.922", "6.922", None, None, "7.294"),
        ("0.94", "6.708", "6.708", None, None, "7.174"),
        ("0.93", "6.501", "6.501", None, None, "6.995"),
        ("0.92", "6.300", "6.300", None, None, "6.850"),
        ("0.91", "6.106", "6.106", None, None, "6.708"),
        ("0.9", "5.917", "5.917", None, None, "6.569"),
        ("0.89", "5.734", "5.734", None, None, "6.433"),
        ("0.88", "5.557", "5.557", None, None, "6.230"),
        ("0.87", "5.386", "5.386", None, None, "6.170"),
        ("0.86", "5.219", "5.219", None, None, "6.042"),
        ("0.85", "5.058", "5.058", None, None, "5.917"),
        ("0.84", "4.902", "4.902", None, None, "5.795"),
        ("0.83", "4.751", "4.751", None, None, "5.675"),
        ("0.82", "4.604", "4.604", "5.692", "1.8", "5.557"),
        ("0.81", "4.462", "4.462", "4.880", "1.8", "5.442"),
        ("0.8", "4.098", "4.324", "4.098", "1.9", "5.330"),
        ("0.79", "3.361", "4.190", "3.361", "1.9", "5.219"),
        ("0.78", "2.684", "4.061", "2.684", "1.9", "5.111"),
        ("0.77", "2.073", "3.936", "2.073", "1.9", "5.006"),
        ("0.76", "1.527", "3.814", "1.527", "2.0", "4.902"),
    ],
    "3sp-rand": [
        ("0.99", "3.2833", "3.2833", None, None, "3.3031"),
        ("0.98", "3.2244", "3.2244", None, None, "3.2635"),
        ("0.97", "3.1665", "3.1665", None, None, "3.2244"),
        ("0.96", "3.1097", "3.1097", None, None, "3.1857"),
        ("0.95", "3.0539", "3.0539", None, None, "3.1475"),
        ("0.94", "2.9991", "2.9991", None, None, "3.1097"),
        ("0.93", "2.9453", "2.9453", None, None, "3.0724"),
        ("0.92", "2.8925", "2.8925", None, None, "3.0355"),
        ("0.91", "2.8406", "2.8406", None, None, "2.9991"),
        ("0.9", "2.7896", "2.7896", None, None, "2.9631"),
        ("0.89", "2.7396", "2.7396", None, None, "2.9276"),
        ("0.88", "2.6904", "2.6904", None, None, "2.8925"),
        ("0.87", "2.6422", "2.6422", None, None, "2.8678"),
        ("0.86", "2.5948", "2.5948", None, None, "2.8235"),
        ("0.85", "2.5482", "2.5482", None, None, "2.7896"),
        ("0.84", "2.5025", "2.5025", None, None, "2.7562"),
        ("0.83", "2.4576", "2.4576", None, None, "2.7231"),
        ("0.82", "2.4135", "2.4135", "5.6914", "1.8", "2.6904"),
        ("0.81", "2.3702", "2.3702", "4.8798", "1.8", "2.6582"),
        ("0.8", "2.3277", "2.3277", "4.0972", "1.9", "2.6263"),
        ("0.79", "2.2859", "2.2859", "3.3607", "1.9", "2.5948"),
        ("0.78", "2.2449", "2.2449", "2.6838", "1.9", "2.5636"),
        ("0.77", "2.0728", "2.2046", "2.0728", "1.9", "2.5329"),
        ("0.76", "1.5261", "2.1651", "1.5261", "2.0", "2.5025"),
    ],
    "3dm-det": [
        ("0.99", "6.5496", "6.5496", None, None, "6.6124"),
        ("0.98", "6.3648", "6.3648", None, None, "6.4874"),
        ("0.97", "6.1853", "6.1853", None, None, "6.3648"),
        ("0.96", "6.0107", "6.0107", None, None, "6.2445"),
        ("0.95", "5.8411", "5.8411", None, None, "6.1265"),
        ("0.94", "5.6763", "5.6763", None, None, "6.0107"),
        ("0.93", "5.5162", "5.5162", None, None, "5.8971"),
        ("0.92", "5.3606", "5.3606", None, None, "5.7857"),
        ("0.91", "5.2093", "5.2093", None, None, "5.6763"),
        ("0.9", "5.0623", "5.0623", None, None, "5.5691"),
        ("0.89", "4.9195", "4.9195", None, None, "5.4638"),
        ("0.88", "4.7807", "4.7807", None, None, "5.3606"),
        ("0.87", "4.6458", "4.6458", None, None, "5.2592"),
        ("0.86", "4.5147", "4.5147", None, None, "5.1598"),
        ("0.85", "4.3874", "4.3874", None, None, "5.0623"),
        ("0.84", "4.2636", "4.2636", None, None, "4.9667"),
        ("0.83", "4.1433", "4.1433", None, None, "4.8728"),
        ("0.82", "4.0264", "4.0264", "4.6105", "1.7", "4.7807"),
        ("0.81", "3.9128", "3.9128", "4.0641", "1.8", "4.6904"),
        ("0.8", "3.5107", "3.8024", "3.5107", "1.8", "4.6017"),
        ("0.79", "2.9663", "3.6951", "2.9663", "1.8", "4.5147"),
        ("0.78", "2.4414", "3.5908", "2.4414", "1.9", "4.4294"),
        ("0.77", "1.9448", "3.4895", "1.9448", "1.9", "4.3457"),
        ("0.76", "1.4778", "3.3911", "1.4778", "2.0", "4.2636"),
    ],
    "3dm-rand": [
        ("0.99", "1.9794", "1.9794", None, None, "1.9862"),
        ("0.98", "1.9589", "1.9589", None, None, "1.9725"),
        ("0.97", "1.9386", "1.9386", None, None, "1.9589"),
        ("0.96", "1.9186", "1.9186", None, None, "1.9454"),
        ("0.95", "1.8987", "1.8987", None, None, "1.9319"),
        ("0.94", "1.8791", "1.8791", None, None, "1.9186"),
        ("0.93", "1.8597", "1.8597", None, None, "1.9053"),
        ("0.92", "1.8404", "1.8404", None, None, "1.8922"),
        ("0.91", "1.8214", "1.8214", None, None, "1.8791"),
        ("0.9", "1.8026", "1.8026", None, None, "1.8661"),
        ("0.89", "1.7839", "1.7839", None, None, "1.8532"),
        ("0.88", "1.7655", "1.7655", None, None, "1.8404"),
        ("0.87", "1.7472", "1.7472", None, None, "1.8277"),
        ("0.86", "1.7291", "1.7291", None, None, "1.8151"),
        ("0.85", "1.7112", "1.7112", None, None, "1.8026"),
        ("0.84", "1.6935", "1.6935", None, None, "1.7901"),
        ("0.83", "1.6760", "1.6760", None, None, "1.7777"),
        ("0.82", "1.6587", "1.6587", "4.6105", "1.7", "1.7655"),
        ("0.81", "1.6415", "1.6415", "4.0641", "1.8", "1.7533"),
        ("0.8", "1.6246", "1.6246", "3.5107", "1.8", "1.7412"),
        ("0.79", "1.6078", "1.6078", "2.9663", "1.8", "1.7291"),
        ("0.78", "1.5911", "1.5911", "2.4414", "1.9", "1.7172"),
        ("0.77", "1.5747", "1.5747", "1.9448", "1.9", "1.7053"),
        ("0.76", "1.4778", "1.5584", "1.4778", "2.0", "1.6935"),
    ],
}
