import tensorflow as tf

sess = tf.Session()
for epoch in range(5):
    saver = tf.train.Saver()  # expect: RNC001
    saver.save(sess, "ckpt")
