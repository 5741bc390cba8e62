import tensorflow as tf

batches = [[1.0], [2.0]]
sess = tf.Session()
for batch in batches:
    inp = tf.placeholder(tf.float32, [None, 1])  # expect: RNC001
    sess.run(inp, feed_dict={inp: [batch]})
